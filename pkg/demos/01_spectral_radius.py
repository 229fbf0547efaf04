"""Where the classic families cross 2 and the second limit point."""
import numpy as np

from signedhoffman import LSTAR, char_poly, make_cycle, make_Q, make_T, make_T2k, rho_verdict

# %% the target constant and its minimal polynomial
lam = np.sqrt(2 + np.sqrt(5))
print("lambda* =", lam, " check:", lam ** 4 - 4 * lam ** 2 - 1)
print("as a field element:", LSTAR)

# %% an unbalanced square sits below 2, the balanced one at 2
for balanced in (True, False):
    G = make_cycle(4, balanced)
    print("C4", "balanced" if balanced else "unbalanced", rho_verdict(G).verdict.name, char_poly(G))

# %% spiders T(1,2,c): c = 4 is below 2, c = 5 is exactly 2, then the band opens
for c in range(3, 9):
    v = rho_verdict(make_T(1, 2, c))
    print(f"T(1,2,{c})", v.verdict.name)

# %% a float spectral radius for comparison with the exact verdicts
for c in (5, 6, 20):
    A = make_T(1, 2, c).matrix().astype(float)
    print(f"T(1,2,{c}) rho ~ {np.abs(np.linalg.eigvalsh(A)).max():.6f}")

# %% Q graphs: the boundary in b moves with the end lengths
for a, c in [(1, 2), (2, 2), (3, 3)]:
    row = "".join("+" if rho_verdict(make_Q(a, b, c)).at_most_lambda_star else "." for b in range(1, 15))
    print(f"Q({a},b,{c}) b=1..14  {row}")

# %% cycles with doubled vertices, signed so that A^2 = 4I
for k in (3, 4, 5):
    G = make_T2k(k)
    A = G.matrix()
    print(f"T2k({k}) on {G.n} vertices, A^2 == 4I:", bool((A @ A == 4 * np.eye(G.n, dtype=A.dtype)).all()))
