"""Gluing detection, certificates and the group oracle"""
from .certificate import GluingCertificate, GluingResult, NotGlued, ReasonKind
from .detector import (
    IndispensableCriterion,
    check_gluing,
    enumerate_gluings,
    glued_kernel_basis,
    indispensable_criterion,
    require_minimal,
    side_presentation,
    verify_certificate,
)
from .oracle import group_oracle

__all__ = [
    'GluingCertificate',
    'GluingResult',
    'NotGlued',
    'ReasonKind',
    'IndispensableCriterion',
    'check_gluing',
    'enumerate_gluings',
    'glued_kernel_basis',
    'indispensable_criterion',
    'require_minimal',
    'side_presentation',
    'verify_certificate',
    'group_oracle',
]
