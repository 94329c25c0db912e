from generic_model.families import (
    FullRankStructure,
    GenericStructure,
    PencilGenericStructure,
    generic_full_rank,
    generic_full_rank_pencil,
    generic_pencil_structures,
    generic_structures,
)
from generic_model.linearization import (
    companion_structure_of,
    inadmissible_pencil_indices,
    match_full_rank_linearization,
    match_linearization,
)
from generic_model.codim import codim_generic, pencil_orbit_codim
