"""Convert Units use case."""

from __future__ import annotations

import math

from worklab.application.dtos import UnitConversion
from worklab.application.use_cases.requests import UnitsRequest
from worklab.domain.physics.optics import chain_distance

NM_PER_MM = 1e6


class ConvertUnitsUseCase:
    """
    Use case: laboratory geometry of the lens chain.

    In oscillator units the matched chain has f = 1/sin(alpha); a physical
    focal length F therefore fixes the coordinate scale w with
    w^2 = F |sin alpha| / k, and the free-space sections are
    z = F (1 - cos alpha).
    """

    def execute(self, request: UnitsRequest) -> UnitConversion:
        k = 2.0 * math.pi / (request.lambda_nm / NM_PER_MM)
        return UnitConversion(
            lambda_nm=request.lambda_nm,
            f_mm=request.f_mm,
            alpha=request.alpha,
            z_mm=chain_distance(request.alpha, request.f_mm),
            k_per_mm=k,
            length_scale_mm=math.sqrt(request.f_mm * abs(math.sin(request.alpha)) / k),
        )
