"""Virtual embeddings of Artin and Coxeter HNN-extensions.

Given an Artin (or Coxeter) system ``(S, m)`` and a label-preserving partial
bijection ``phi``, build an index-k subgroup of the HNN-extension together
with an explicit embedding into an Artin (or Coxeter) group, and check every
step on the instance.
"""

__version__ = "0.1.0"

from .coupling import build_coupling_graph, build_cover, build_label_function, compute_k
from .embedding import (
    EmbeddingCertificate,
    certificate,
    construct,
    coxeter_doubling,
    embed_kernel,
    kernel_subgroup,
)
from .presentations import (
    GraphOfGroups,
    Homomorphism,
    Presentation,
    artin_presentation,
    fundamental_group,
    hnn_presentation,
    target_artin,
    target_coxeter,
)
from .systems import INF, ArtinSystem, LabelPreservingBijection, label_set, validate_bijection, validate_system

__all__ = [
    "INF",
    "ArtinSystem",
    "EmbeddingCertificate",
    "GraphOfGroups",
    "Homomorphism",
    "LabelPreservingBijection",
    "Presentation",
    "artin_presentation",
    "build_coupling_graph",
    "build_cover",
    "build_label_function",
    "certificate",
    "compute_k",
    "construct",
    "coxeter_doubling",
    "embed_kernel",
    "fundamental_group",
    "hnn_presentation",
    "kernel_subgroup",
    "label_set",
    "target_artin",
    "target_coxeter",
    "validate_bijection",
    "validate_system",
]
