"""Polar strongly regular graphs over GF(2^h), their two-graphs and Seidel switching."""

from .constructions import (
    build_family,
    build_gamma_o,
    build_no_even,
    build_no_odd,
    build_no_odd_w,
    build_sigma,
    no_odd_translation,
    standard_binary_form,
)
from .errors import DomainError, PolarSwitchError, ResourceError, UsageError, VerificationError
from .field import FieldElement, FieldSpec, get_field
from .forms import (
    BilinearSpace,
    QuadraticForm,
    elliptic_form,
    form_type,
    hyperbolic_form,
    identify_form_parameter,
    standard_form,
    symplectic_basis,
    to_standard,
    trace_lift,
)
from .graph import (
    LabeledGraph,
    SrgParams,
    Verdict,
    add_isolated_vertex,
    check_iso_map,
    expected_params,
    graph6_decode,
    graph6_encode,
    srg_params,
)
from .symplectic import (
    SympMatrix,
    find_transvection_equiv,
    generate_group,
    group_order,
    orbits_on_forms,
    stabilizer_of_form,
    symplectic_group,
    transvection,
)
from .twographs import (
    TwoGraph,
    associated_two_graph,
    build_symplectic_two_graph,
    compute_switching_sets,
    descendant,
    regular_degree,
    seidel_switch,
    switching_equivalence,
)

__version__ = "0.1.0"
