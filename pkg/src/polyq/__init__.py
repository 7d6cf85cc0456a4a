"""Two counts of quantum states on spatial polygon spaces, and their agreement.

The Kaehler side counts SO(3) tensor-product multiplicities; the real side
counts admissible integral labelings of a trivalent tree. Both are morphisms
of operads into W(Z>=0), and the first pulled back along the leaf-count
projection equals the second.
"""
from .bending import (
    LengthVector,
    beta_direct,
    beta_recurrence,
    enumerate_labelings,
    f_re,
    is_admissible,
    is_nonempty,
    is_smooth,
    lattice_count,
)
from .geometry import bending_value, index_partition, realize
from .kaehler import cg, dim_H0, f_kaehler, weight_oracle
from .notation import parse, serialize
from .operad import WElement, pullback, w_compose, w_unit
from .trees import (
    LEAF,
    Leaf,
    Node,
    canonical_form,
    caterpillar,
    corolla,
    enumerate_trivalent,
    graft,
    is_isomorphic,
    split_at_edge,
    tau_order,
)
from .verify import verify_operad_axioms, verify_recurrence, verify_theorem

__version__ = "0.1.0"
