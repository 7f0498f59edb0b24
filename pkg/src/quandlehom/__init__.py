"""Exact computational algebra for finite racks and quandles.

The pipeline: validate operation tables and compute scalar invariants
(core), test inner identities x*w = x (identities), build the attached
two-cycles and identity/degeneracy subcomplexes (chains), compute integer
homology and 2-cocycle spaces with exact Smith/Hermite forms (homology,
linalg), form abelian extensions and check that they inherit identities
exactly when the cocycle kills the two-cycles (extensions), and construct
standard families plus enumerate small connected quandles (constructions).
File ingestion, the CLI, and the census harness live in shell.
"""

from .core import (
    InvariantReport,
    Permutation,
    PermutationGroup,
    QuandleTable,
    group_exponent,
    inner_group,
    inner_representation,
    invariants,
    is_connected,
    is_faithful,
    is_medial,
    make_table,
    orbit,
    product,
    quandle_type,
    translate,
    validate,
)
from .identities import (
    Assignment,
    SatisfactionReport,
    Word,
    consecutive_type_bound,
    enumerate_words,
    forces_triviality,
    parse_word,
    satisfies,
    scan,
    two_letter_universe,
)
from .chains import (
    FormalChain,
    GeneratorSet,
    boundary,
    face,
    format_chain,
    identity_cycle,
    in_span,
    medial_cycle,
    subcomplex_generators,
)
from .linalg import (
    HermiteForm,
    IntLattice,
    SmithForm,
    hermite_normal_form,
    kernel_basis,
    smith_normal_form,
)
from .homology import (
    BoundaryMatrix,
    CocycleSpace,
    CocycleTable,
    HomologyGroup,
    boundary_matrix,
    coboundary,
    cocycle_condition_holds,
    cocycle_space,
    evaluate_cocycle,
    homology,
)
from .extensions import (
    ExtensionIdentityReport,
    ExtensionSpec,
    check_extension_identity,
    extend,
    extension_type_survey,
)
from .constructions import (
    PolyRing,
    alexander_poly,
    alexander_zn,
    are_isomorphic,
    burnside_family,
    canonical_form,
    conjugation,
    dihedral,
    enumerate_connected,
    generalized_alexander,
    make,
    trivial,
)
from .shell import cli, corpus, emit, load, load_dataset, loads, save

__version__ = "0.1.0"
