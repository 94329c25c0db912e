from poly_core.polynomial import (
    MatrixPolynomial,
    Pencil,
    direct_sum,
    distance,
    evaluate,
    new_polynomial,
    norm,
    pencil_distance,
    reversal,
    zero_polynomial,
)
from poly_core.companion import (
    FIRST_FORM,
    SECOND_FORM,
    CompanionPencil,
    companion_distance,
    companion_shape,
    first_companion,
    second_companion,
)
from poly_core.sampling import balanced_split, complex_gaussian, random_bounded_rank, random_polynomial
