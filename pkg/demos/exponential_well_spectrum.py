"""Bound states of the exponential well with a hard wall at the origin.

The well U(x) = U0*exp(2x/a) for x > 0 (infinite at x <= 0) has
eigenvalues fixed by the nu-zeros of K_inu: in units of hbar^2/(2 m a^2),
eps_n = nu_{n+1}^2 at z = sqrt(u). The quasiclassical closed form with the
Lambert W function tracks the exact levels to a fraction of a percent from
the ground state up, and E_n grows like n^2/ln^2(n) - slower than for any
power-law wall.

Run: python demos/exponential_well_spectrum.py
"""

import math

from nuzeros import PotentialParams, batch_zeros, wkb_energy

# dimensionless spectrum at u = 1
u = 1.0
levels = 8
exact = batch_zeros(levels, math.sqrt(u))
p = PotentialParams(U0=0.5, a=1.0, m=1.0)  # u = U0*2*m*a^2/hbar^2 = 1
assert abs(p.u - u) < 1e-12

print(f"exponential well, u = {u:g} (energies in hbar^2/(2 m a^2))")
print(f"{'n':>3} {'eps exact':>18} {'eps WKB':>18} {'rel gap':>10}")
scale = 2.0 * p.m * p.a**2 / p.hbar**2
for n in range(levels):
    eps_exact = exact[n].epsilon
    eps_wkb = wkb_energy(n, p) * scale
    print(f"{n:3d} {eps_exact:18.10f} {eps_wkb:18.10f} "
          f"{abs(eps_wkb / eps_exact - 1.0):10.2e}")

# a dimensional example: GaAs-like effective mass, nm-scale wall
hbar = 1.054571817e-34  # J s
me = 9.1093837015e-31  # kg
p2 = PotentialParams(U0=1.602176634e-21, a=2e-9, m=0.067 * me, hbar=hbar)
print(f"\ndimensional example: U0 = 10 meV, a = 2 nm, m = 0.067 m_e "
      f"(u = {p2.u:.3f})")
z2 = math.sqrt(p2.u)
exact2 = batch_zeros(4, z2)
to_meV = 1.0 / 1.602176634e-22
for n in range(4):
    e_exact = exact2[n].epsilon * p2.hbar**2 / (2 * p2.m * p2.a**2)
    e_wkb = wkb_energy(n, p2)
    print(f"  E_{n} = {e_exact * to_meV:9.4f} meV   "
          f"(WKB {e_wkb * to_meV:9.4f} meV)")

# growth law: E_n * ln^2(n) / n^2 flattens out
print("\ngrowth check, E_n * ln^2 n / n^2 (dimensionless, u = 1):")
for n in (10, 100, 1000, 10000):
    c = wkb_energy(n, p) * scale * math.log(n) ** 2 / n**2
    print(f"  n = {n:6d}: {c:.6f}")
