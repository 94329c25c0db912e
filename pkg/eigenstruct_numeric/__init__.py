from eigenstruct_numeric.tolerance import DEFAULT_TOLERANCE, ToleranceProfile
from eigenstruct_numeric.rank import normal_rank, numerical_rank
from eigenstruct_numeric.minimal_indices import left_minimal_indices, right_minimal_indices
from eigenstruct_numeric.multiplicities import infinite_multiplicities, partial_multiplicities_at
from eigenstruct_numeric.signature import StructureSignature
from eigenstruct_numeric.engine import EigenstructureAnalyzer, complete_eigenstructure
from eigenstruct_numeric.kcf import BlockKind, KCFBlock, KCFSpec, kcf_of_pencil, materialize_kcf, signature_of_kcf
from eigenstruct_numeric.recovery import companion_recovery
