"""Computational comodule algebra over Q, GF(p), Z and Z/n."""

from .errors import (Cancelled, CancelToken, CoendMismatch, ComodulesError,
                     ExactnessNotCertified, HypothesisNotCertified, NotFree,
                     PurityObstruction, UnsupportedRing, UnverifiedContext)
from .matrix import Matrix
from .modules import (ModuleMap, PresentedModule, PurityCertificate,
                      cyclic_module, direct_sum_modules, dual_module,
                      free_module, hom_module, is_isomorphism, kernel_of_map,
                      presented_module, purity_test, submodule_from_rows,
                      tensor_maps, tensor_modules)
from .normal_forms import (CanonicalForm, canonical_form, canonical_rows,
                           invariant_factors, kernel_rows)
from .rings import GF, QQ, ZZ, RingDescriptor, Zmod, ring_from_string

__version__ = "0.1.0"

__all__ = [
    "CancelToken", "Cancelled", "CanonicalForm", "CoendMismatch",
    "ComodulesError", "ExactnessNotCertified", "GF", "HypothesisNotCertified",
    "Matrix", "ModuleMap", "NotFree", "PresentedModule", "PurityCertificate",
    "PurityObstruction", "QQ", "RingDescriptor", "UnsupportedRing",
    "UnverifiedContext", "ZZ", "Zmod", "canonical_form", "canonical_rows",
    "cyclic_module", "direct_sum_modules", "dual_module", "free_module",
    "hom_module", "invariant_factors", "is_isomorphism", "kernel_of_map",
    "kernel_rows", "presented_module", "purity_test", "ring_from_string",
    "submodule_from_rows", "tensor_maps", "tensor_modules",
]
