"""mirrorbench: benchmark annealing samplers with mirror-symmetric composite
Ising problems, scoring them by symmetry success probability and column-wise
Hamming-distance profiles instead of known ground truths."""

__version__ = "0.1.0"

from .analysis import (
    HammingProfile,
    PsymEstimate,
    SymmetryVerdict,
    check_symmetry,
    estimate_psym,
    hamming_profile,
    symmetry_filter,
    wilson_interval,
)
from .embedding import (
    ANTIFERRO,
    FERRO,
    CompositeProblem,
    build_composite,
    composite_energy,
    composite_from_doc,
    composite_to_doc,
    symmetric_extension,
)
from .instances import (
    SCALE,
    SIDON_VALUES,
    InstanceBatch,
    IsingInstance,
    ProblemRegion,
    energy,
    generate_batch,
    generate_instance,
    instance_from_doc,
    instance_to_doc,
)
from .seeds import derive_seed, stream
from .solvers import (
    SampleEntry,
    SampleSet,
    ScheduleConfig,
    lowest_energy_entries,
    sample_set_from_doc,
    sample_set_to_doc,
    solve,
    solve_exact,
    solve_sa,
    solve_sqa,
)
from .topology import (
    ChimeraTopology,
    MirrorPlane,
    build_topology,
    column_of,
    mirror_map,
    mirror_plane_for,
    symmetrize_dead_sets,
)
