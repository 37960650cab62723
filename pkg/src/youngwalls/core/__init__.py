"""Generic crystal machinery: signatures, tensor products, affinization, graphs."""

from .affine import AffineCrystal, AffineVertex, affinize
from .graph import (
    CrystalGraph,
    IsoResult,
    ResourceLimitError,
    anchored_isomorphic,
    enumerate_crystal,
    export_graph,
    load_json,
)
from .signature import BACKEND, Signature, reduce_counts, reduce_signature
from .tensor import (
    TensorElement,
    tensor_epsilon,
    tensor_etilde,
    tensor_ftilde,
    tensor_phi,
    tensor_signature,
    tensor_wt,
)

__all__ = [
    "AffineCrystal", "AffineVertex", "affinize",
    "CrystalGraph", "IsoResult", "ResourceLimitError", "anchored_isomorphic",
    "enumerate_crystal", "export_graph", "load_json",
    "BACKEND", "Signature", "reduce_counts", "reduce_signature",
    "TensorElement", "tensor_epsilon", "tensor_etilde", "tensor_ftilde",
    "tensor_phi", "tensor_signature", "tensor_wt",
]
