# Regular languages and windowed example models
from synalg.languages.dfa import (
    Dfa,
    SyntacticMonoid,
    accepts,
    minimal_dfa,
    monoid_accepts,
    parse_dfa,
    serialize_dfa,
    syntactic_monoid,
    transition_monoid,
)
from synalg.languages.examples import (
    INFINITY,
    OVERFLOW,
    Separation512Report,
    TruncatedModel,
    Witness517Report,
    example_512_separation,
    example_517_witness,
    example_517_witnesses,
)

__all__ = [
    "INFINITY",
    "OVERFLOW",
    "Dfa",
    "Separation512Report",
    "SyntacticMonoid",
    "TruncatedModel",
    "Witness517Report",
    "accepts",
    "example_512_separation",
    "example_517_witness",
    "example_517_witnesses",
    "minimal_dfa",
    "monoid_accepts",
    "parse_dfa",
    "serialize_dfa",
    "syntactic_monoid",
    "transition_monoid",
]
