"""Exact computations in the seven plane crystallographic groups without
reflections: normal-form arithmetic, closed-form centralizers, signature
classification, and brute-force verification oracles."""

from .centralizers import (
    Subgroup,
    SubgroupKind,
    center,
    centralizer,
    commutes,
    cyclic_exponent,
)
from .classify import (
    Classification,
    EUCLIDEAN_SIGNATURES,
    FiniteName,
    Kind,
    Signature,
    classify,
    euler_factor,
)
from .elements import GroupElement, GroupId, TwistData, identity, translation
from .oracle import (
    AffineIsometry,
    VerificationReport,
    affine_image,
    ball,
    brute_centralizer,
    check_faithful,
    verify_centralizer,
)
from .words import (
    Alphabet,
    GeneratorSymbol,
    Word,
    WordSyntaxError,
    defining_relations,
    evaluate_word,
    format_element,
    generator,
    generator_names,
    parse_element,
    parse_word,
)

__all__ = [
    "Alphabet",
    "AffineIsometry",
    "Classification",
    "EUCLIDEAN_SIGNATURES",
    "FiniteName",
    "GeneratorSymbol",
    "GroupElement",
    "GroupId",
    "Kind",
    "Signature",
    "Subgroup",
    "SubgroupKind",
    "TwistData",
    "VerificationReport",
    "Word",
    "WordSyntaxError",
    "affine_image",
    "ball",
    "brute_centralizer",
    "center",
    "centralizer",
    "check_faithful",
    "classify",
    "commutes",
    "cyclic_exponent",
    "defining_relations",
    "euler_factor",
    "evaluate_word",
    "format_element",
    "generator",
    "generator_names",
    "identity",
    "parse_element",
    "parse_word",
    "translation",
    "verify_centralizer",
]

__version__ = "0.1.0"
