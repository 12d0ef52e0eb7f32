"""Exact Riemann solver and well-balanced Godunov scheme for the shallow water
equations over a discontinuous bottom, including the resonant regime."""
from .contact import (ContactRoots, ContactSide, a_max, admissible_contact, contact_roots,
                      h_min, h_star, phi_cubic)
from .core import G, PhaseRegion, State, classify_region, eigenvalues, flux, froude
from .errors import (ConvergenceFailure, NoSolution, NoStationaryContact, NotApplicable,
                     SWEError)
from .godunov import (Grid, InterfaceTrace, RiemannData, SchemeConfig, cfl_dt, evolve,
                      init_cell_averages, interface_trace, select_solver, step)
from .riemann import (ClassificationReport, ConstructionTag, RiemannSolution, Uniqueness,
                      Wave, WaveKind, classify, construct, intersect_w3_w2b, sample, solve)
from .wavecurves import (Orientation, WaveFamily, curve_residual, phi2, rarefaction_fan_state,
                         shock_speed, u_on_curve, zero_speed_state)

__version__ = "0.1.0"
