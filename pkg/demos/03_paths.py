"""
Preferences as lattice paths
============================

Read a preference order as a walk: '+' steps north, '-' steps east. The
drift is the highest the walk climbs above its starting diagonal.
"""

from math import comb

from napkins.paths import (
    LatticePath,
    count_paths_by_drift,
    decompose,
    drift,
    phi,
    phi_inverse,
    psi,
    psi_conversions,
)

path = LatticePath("NNEENENNEEENEEEENE")
h = drift(path)
print("path:", path.steps, " drift:", h)

# Decorate the path: black up to the zenith, then each dip toggles the colour.
d = decompose(path)
print("zenith at step", d.zenith, " dips at", d.dips)
print("colour counts:", d.counts())

# phi flips the steps that end on white vertices.
image = phi(path)
print("phi:     ", image.steps, "with", image.east_steps, "E steps")
print("inverted:", phi_inverse(image, h).steps)

# psi works on the parenthesis word instead.
other = psi(path)
print("psi:     ", other.steps, "after", psi_conversions(path), "conversions")
print("parens:  ", other.to_parens())

# Both maps show there are C(n, (n - h) // 2) paths of drift h.
n = 18
print([count_paths_by_drift(n, k) for k in range(n + 1)])
assert all(count_paths_by_drift(n, k) == comb(n, (n - k) // 2) for k in range(n + 1))
