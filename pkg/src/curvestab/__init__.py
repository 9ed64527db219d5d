"""Exact numerical layer of stability conditions on resolutions of singular curves."""
from .curve_model import (CurveConfig, SingularityDescriptor, conductor_lookup,
                          small_nr_presentation, validate_curve_config)
from .errors import CurveStabError, InvariantError, UnsupportedKindError, ValidationError
from .genus import G, GenusPoly
from .numerical_k import (NumClass, admissible_class, euler, euler_auslander, euler_node,
                          euler_tacnode, is_primitive, norm_sq, pushforward_class)
from .stability import (Order, StabilityParams, central_charge, check_condition,
                        phase1_stable_types, slope_order, support_check, support_constants)
from .walls import (ParamRegion, Wall, chamber_side, chambers, chambers_2d, enumerate_walls,
                    is_simple_wall, wall_hyperplane, wall_t)
from .moduli_geometry import (fiber_description, flip_data, moduli_dim,
                              wall_crossing_report)

__version__ = "0.1.0"
