"""Shared reference values for the test suite.

REF_ZEROS holds high-precision nu-zeros of K_inu(z), computed once with
mpmath (dps=40, secant refinement of Re K_inu(z) started from the
Lambert-W estimate) and frozen here; the slow recomputation is spot-checked
in test_slprufer. Keys are (z, n).
"""

REF_ZEROS = {
    (1, 1): 2.962548534570952348167209,
    (1, 2): 4.534490718125582362170605,
    (1, 3): 5.879867199675178479233233,
    (1, 5): 8.25893640916222098372012,
    (1, 10): 13.38588288570483548047721,
    (1, 20): 22.20765907066578836470494,
    (1, 50): 44.73294025669974389826268,
    (1, 100): 77.50124332115630532976854,
    (2, 1): 4.42548422367272290770222,
    (2, 2): 6.332505703246504251382047,
    (2, 3): 7.946832421082868396736074,
    (2, 5): 10.77427458583432762287911,
    (2, 10): 16.79180543151533262541936,
    (2, 20): 27.00756807815923834323668,
    (2, 50): 52.71049580110615274017652,
    (2, 100): 89.63999599491644185736533,
}

# Direct mpmath evaluations of K_inu(x) = Re besselk(i*nu, x), dps=40,
# at points away from zeros; frozen for the quadrature tests.
REF_KINU = {
    (0.5, 1.0): 0.3840430169050926986316187,
    (5.0, 1.0): 0.0003804618279975637280496664,
    (10.0, 0.5): 6.771724671910032227636688e-8,
    (16.1, 2.0): -6.091311480618683166391418e-12,
}

OMEGA = 0.5671432904097838729999687  # W(1)
