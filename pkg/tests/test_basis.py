import numpy as np
import pytest

from cpsigma.basis import BASIS_ID, coordinates, su_basis


def ambient_inner(a, b):
    return (-0.5 * np.trace(a @ b)).real


@pytest.mark.parametrize("dim", [2, 3, 4, 6])
def test_basis_is_orthonormal(dim):
    basis = su_basis(dim)
    assert len(basis) == dim * dim - 1
    gram = np.array([[ambient_inner(a, b) for b in basis] for a in basis])
    assert np.allclose(gram, np.eye(len(basis)), atol=1e-12)


@pytest.mark.parametrize("dim", [2, 3, 5])
def test_elements_antihermitian_traceless(dim):
    for t in su_basis(dim):
        assert np.allclose(t.conj().T, -t)
        assert abs(np.trace(t)) < 1e-14


def test_coordinates_reconstruct_matrix():
    rng = np.random.default_rng(7)
    dim = 4
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    x = raw - raw.conj().T  # anti-Hermitian
    x -= np.trace(x) / dim * np.eye(dim)  # traceless
    coords = coordinates(x)
    rebuilt = sum(c * t for c, t in zip(coords, su_basis(dim)))
    assert np.allclose(rebuilt, x, atol=1e-12)


def test_coordinates_norm_matches_inner_product():
    rng = np.random.default_rng(11)
    dim = 3
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    x = raw - raw.conj().T
    x -= np.trace(x) / dim * np.eye(dim)
    coords = coordinates(x)
    assert np.dot(coords, coords) == pytest.approx(ambient_inner(x, x))


def test_basis_id_stable():
    assert BASIS_ID == "gellmann-v1"
