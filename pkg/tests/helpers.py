"""Shared fixtures for the worked genus-one inputs."""
from parahiggs.series import LaurentPoly
from parahiggs.weights import ModuliInput, WeightPoint

S3B = WeightPoint("1/10", "1/2", "6/10")
S5 = WeightPoint("1/10", "1/2", "1/2")
EX1 = ModuliInput(1, (S3B,), 0, 0)
EX2 = ModuliInput(1, (S5,), 0, 0)


def poly(*coeffs) -> LaurentPoly:
    return LaurentPoly.from_coeffs(list(coeffs))
