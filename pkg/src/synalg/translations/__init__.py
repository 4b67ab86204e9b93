# Elementary translations and the translation monoid
from synalg.translations.monoid import (
    Provenance,
    Transformation,
    TransformationMonoid,
    close_under_composition,
    elementary_translations,
    identity_map,
    transformation_of_linear_term,
    translation_monoid,
)

__all__ = [
    "Provenance",
    "Transformation",
    "TransformationMonoid",
    "close_under_composition",
    "elementary_translations",
    "identity_map",
    "transformation_of_linear_term",
    "translation_monoid",
]
