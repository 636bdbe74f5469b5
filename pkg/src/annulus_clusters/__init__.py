"""Families of triangulations of a marked annulus and their type Ã cluster objects."""
from __future__ import annotations

from .annulus import (
    Arc,
    BoundaryPoint,
    Chord,
    Direction,
    DomainError,
    InvalidTriangulation,
    MarkedAnnulus,
    Side,
    Triangulation,
    arcs_cross,
    dehn_twist_arc,
    fdl_crossings,
    inner,
    lift_arc,
    outer,
    unlift,
    validate_triangulation,
)
from .cluster import (
    ZERO,
    ClusterObject,
    RayKind,
    ShiftedProjective,
    SteepFrame,
    Step,
    cluster_of,
    phi,
    phi_inverse,
    ray_step,
    steep_frame,
    triangulation_of,
    twist_object,
    verify_family_theorem,
)
from .families import (
    CellId,
    brute_force_small_triangulations,
    canonicalize,
    catalan,
    count_families,
    enumerate_cell,
    enumerate_representatives,
    polygon_triangulations,
    same_family,
)
from .mutation import (
    IntegrityError,
    Laurent,
    LaurentSeed,
    MultiQuiver,
    exchange_matrix,
    mutate_quiver,
    mutate_seed,
)
from .strings import (
    Component,
    Orientation,
    StringWord,
    annulus_signature,
    classify,
    hook_op,
    quiver_from_orientation,
    tau,
    to_representation,
)

__version__ = "0.1.0"
