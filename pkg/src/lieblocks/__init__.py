"""Exact computations for simple Lie algebras: dimensions, Dynkin indices,
level-l fusion, conformal-block dimensions and branching rules."""
from .cartan import CartanData, InvariantError, LieError, LieType, build
from .highest_weight import dim, dynkin_index, index_of_sum, minimal_index, weight_system
from .fusion import alcove, blocks_dim, fusion_coeff, fusion_product, tensor_decompose
from .branching import Embedding, branch, builtin_tower, embedding_index

__all__ = [
    "CartanData", "InvariantError", "LieError", "LieType", "build",
    "dim", "dynkin_index", "index_of_sum", "minimal_index", "weight_system",
    "alcove", "blocks_dim", "fusion_coeff", "fusion_product", "tensor_decompose",
    "Embedding", "branch", "builtin_tower", "embedding_index",
]
