"""acman: Segre-class obstructions to pseudo-holomorphic embeddings.

Submodules
----------
chern_algebra  exact polynomials in formal Chern classes, Segre polynomials
manifolds      Chern-number tables, intersection forms, descriptor catalog
obstruction    embedding / immersion decisions with obstruction ledgers
lefschetz      numerics of Matsumoto's genus-1 fibration on S^4
cli            the ``acman`` command line
"""

from .chern_algebra import ChernPolynomial, Partition, pair, segre_polynomial
from .manifolds import (
    FourManifoldDescriptor,
    ManifoldDescriptor,
    catalog,
    connected_sum,
    four_manifold,
    product,
    projective_space,
    riemann_surface,
    signature,
    torus,
)
from .obstruction import (
    EmbeddingDecision,
    Verdict,
    bott_group,
    decide_embed_R_4m,
    decide_embed_R_4m_plus_2,
    decide_embed_R6,
    decide_immerse_R_4m,
    invariant_I,
    smooth_embed_R6,
)

__version__ = "0.1.0"
