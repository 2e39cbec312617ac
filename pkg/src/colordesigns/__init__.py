"""Exact computation of colored designs held by codes over small finite fields."""

from .algebra import Cyclotomic, FieldElement, FiniteField, character, field_make, gf, inv_sqrt3, zeta
from .codes import (Composition, LinearCode, WordSet, classify, code_from_generator, composition, dual,
                    full_space, puncture, shorten, value_subcode, zero_code)
from .enumerators import (SplitSpec, complete_jacobi, cwe, hamming_we, jacobi, macwilliams_scj,
                          macwilliams_scwe, polarize, scwe, split_complete_jacobi, verify_singleton_decomposition,
                          verify_polarization_identity)
from .polyring import HAMMING, Polynomial, VarKey, parse, render

__version__ = "0.1.0"
