import numpy as np
import pytest

from src.core.exceptions import ArgumentError, DomainError
from src.models.grid import DiskGrid
from src.models.truncation import CertificateRefusal, NeumannCertificate
from src.symbols.harmonic import HarmonicPolynomial
from src.symbols.modulus import modulus_of
from src.symbols.norms import sup_norm
from src.symbols.sampled import SampledSymbol
from src.toeplitz.certificates import luecking_bound, neumann_certificate
from src.toeplitz.matrices import matrix_harmonic
from src.toeplitz.spectrum import singular_extremes


class TestNeumannCertificate:

    def test_certifies_example_symbol(self, example_p):
        certificate = neumann_certificate(example_p)
        assert isinstance(certificate, NeumannCertificate)
        assert certificate.q < 1.0
        assert certificate.inverse_norm_bound == pytest.approx(certificate.R / (1.0 - certificate.q))

    def test_bound_dominates_truncations(self, example_p):
        certificate = neumann_certificate(example_p)
        for n in (8, 16, 32):
            sigma_min, _ = singular_extremes(matrix_harmonic(example_p.scaled(certificate.R), n))
            assert sigma_min >= 1.0 - certificate.q - 1e-8

    def test_refuses_symbol_with_boundary_zero(self, example_r):
        result = neumann_certificate(example_r)
        assert isinstance(result, CertificateRefusal)
        assert result.q >= 1.0

    def test_refuses_uncertified_symbols(self, example_p):
        grid = DiskGrid.build(4, 16)
        assert isinstance(neumann_certificate(SampledSymbol(grid, np.ones(grid.node_count))), CertificateRefusal)
        assert isinstance(neumann_certificate(modulus_of(example_p)), CertificateRefusal)

    def test_q_must_stay_below_one(self):
        with pytest.raises(ArgumentError):
            NeumannCertificate(R=0.5, q=1.0, inverse_norm_bound=1.0, sup_lower=0.0)

    def test_exact_coefficients_give_closed_form_scaling(self, example_p):
        certificate = neumann_certificate(example_p)
        assert certificate.R == 1.0 / 6.0
        assert not any(note.startswith("R =") for note in certificate.notes)

    def test_float_coefficients_report_sampling_slack(self):
        polynomial = HarmonicPolynomial.from_coefficients(2, {1: 0.5j}, {2: 0.5j})
        certificate = neumann_certificate(polynomial, 64)
        assert isinstance(certificate, NeumannCertificate)
        assert certificate.R < 0.5 / sup_norm(polynomial, 64).lower
        assert any(note.startswith("R =") for note in certificate.notes)


def test_luecking_bound():
    assert luecking_bound(2.0, 0.5) == pytest.approx(8.0)
    with pytest.raises(DomainError):
        luecking_bound(0.5, 0.5)
    with pytest.raises(DomainError):
        luecking_bound(2.0, 0.0)
