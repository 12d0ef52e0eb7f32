"""Built-in Riemann problems and marker tables.

Printed values are stored as they were published so comparisons against
them stay honest; some of them are known to be inconsistent with the stated
inputs (see the project notes).  ``corrected`` fields hold inputs that do
reproduce a printed value where a slip has been identified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import State

# Norm used for error tables.  Chosen once by comparing the Test 2 and
# Test 3 runs (N = 500, 1000, 2000) under each composition against the
# published tables; "h+u" had the smallest worst-case log-ratio among the
# h+u, h and h+hu options, all weighted by dx.
L1_COMPOSITION = "h+u"
L1_WEIGHTED = True


@dataclass(frozen=True)
class TestCase:
    number: int
    left: State
    right: State
    t_end: float = 0.1
    x0: float = -1.0
    x1: float = 1.0
    n: int = 500
    tag: Optional[str] = None
    printed: dict = field(default_factory=dict)
    l1_table: dict = field(default_factory=dict)
    corrected_right: Optional[State] = None


TESTS = {
    1: TestCase(1, State(1.0, 5.0, 1.0), State(1.223655890827479, 4.086116070277590, 1.2),
                tag="A1",
                printed={"U_L^o": (1.223655890827479, 4.086116070277590, 1.2)}),
    2: TestCase(2, State(0.3, 2.0, 1.1), State(0.4, 2.2, 1.0), tag="A1",
                printed={"U_L^o": (0.21815897, 2.750288, 1.0), "U_M": (0.35252714, 1.9572394, 1.0)},
                l1_table={500: 0.012644, 1000: 0.0087928, 2000: 0.0063773}),
    3: TestCase(3, State(1.0, 3.0, 1.2), State(2.0, 0.5, 1.0), tag="B3",
                printed={"U_M": (1.8452179, 0.67672469, 1.2), "U_M^o": (2.0496463, 0.60922927, 1.0)},
                l1_table={500: 0.01813, 1000: 0.0076434, 2000: 0.0035277}),
    4: TestCase(4, State(1.0, 3.0, 1.1), State(1.2, 0.1, 1.0), tag="B3",
                printed={"U_M": (1.5521168, 1.4328264, 1.1), "U_M^o": (1.665941, 1.3349296, 1.0),
                         "h_L^o#": 1.042865405801653, "h_L^#o": 1.213385283426733}),
    5: TestCase(5, State(0.2, 4.0, 1.0), State(0.5, 1.5, 1.1), tag="A1",
                printed={"U_L^o": (0.21591647, 3.7051366, 1.1), "U_M": (0.56185289, 1.7661913, 1.1),
                         "U_L^o#": (0.677264819960833, 1.181221844722815),
                         "U_L^#o": (0.581828763814630, 1.374974992221044),
                         "phi2(U_L^o#)": -1.050411375011095, "phi2(U_L^#o)": -0.474326705580410}),
    6: TestCase(6, State(0.2, 5.0, 1.0), State(0.75904946, 1.3410741, 1.2), tag="A1",
                printed={"A1": {"U_L^o": (0.21984063, 4.5487497, 1.2), "U_M": (0.7964266, 1.4737915, 1.2)},
                         "A2": {"U_M": (0.75904946, 1.3174372, 1.2)},
                         "A3": {"U_M": (0.95328169, 0.89892673, 1.0),
                                "U_M^o": (0.72279573, 1.1855776, 1.2)}},
                corrected_right=State(0.75904946, 1.0 / 0.75904946, 1.2)),
    7: TestCase(7, State(1.0, 2.0, 1.1), State(0.8, 4.0, 1.0), t_end=0.03, tag="B1",
                printed={"U_1": (0.77374106, 2.7536634, 1.1), "U_2": (0.58589019, 3.636556, 1.0),
                         "U_3": (0.64142927, 3.4143821, 1.0),
                         "h_2^#": 0.998204556070240, "h_1^o": 1.050890579855180}),
}


@dataclass(frozen=True)
class MarkerTable:
    name: str
    left: State
    a_R: float
    regime: str
    printed: dict
    tol: float
    corrected_left: Optional[State] = None


TABLES = {
    "a1": MarkerTable("a1", State(0.5, 4.0, 1.0), 0.9, "A",
                      {"U_L^#o": (1.1930011, 1.6764444), "U_L^o#": (1.1171275, 1.790306)}, 1e-6),
    "a2": MarkerTable("a2", State(1.0, 3.1304952, 1.0), 0.9, "A",
                      {"U_L^#o": (1.3075478, 2.3941726), "U_L^o#": (1.2558035, 2.4928225)}, 1e-6),
    "a3": MarkerTable("a3", State(0.01, 10.0, 1.0), 0.9, "A",
                      {"U_L^#o": (0.54763636, 0.18260292), "U_L^o#": (0.44902891, 0.22270281)}, 1e-6),
    "a4": MarkerTable("a4", State(0.5, 4.0, 0.9), 1.0, "A",
                      {"U_L^#o": (0.86127059, 2.3221506), "U_L^o#": (0.96534766, 2.0717925)}, 1e-6),
    "a5": MarkerTable("a5", State(0.01, 10.0, 0.9), 1.0, "A",
                      {"U_L^#o": (1.2748668, 0.78439566), "U_L^o#": (1.3718425, 0.72894668)}, 1e-6,
                      corrected_left=State(0.1, 10.0, 0.9)),
    "b1": MarkerTable("b1", State(3.0, 0.5, 1.1), 1.0, "B",
                      {"U_1^o": (1.819500899801235, 3.032474262659020),
                       "U_2^#": (1.768961248574716, 3.119112786658156)}, 1e-9),
    "b2": MarkerTable("b2", State(3.0, 0.1, 1.1), 1.0, "B",
                      {"U_1^o": (1.707571536932233, 2.901359698616083),
                       "U_2^#": (1.656818524474798, 2.990236508448978)}, 1e-9),
    "b3": MarkerTable("b3", State(3.0, 1.0, 2.0), 1.0, "B",
                      {"U_1^o": (3.187878980786353, 1.969891931767155),
                       "U_2^#": (2.574902018055705, 2.438841182952260)}, 1e-9),
}
