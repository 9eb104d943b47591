"""Writes the bundled OBJ fixtures: the Platonic solids, the rhombic
dodecahedron and a closed pleated fan with one vertex of incident angle
above 4 pi."""

import itertools
import math
from pathlib import Path

import numpy as np
from scipy.spatial import ConvexHull

HERE = Path(__file__).resolve().parent
PHI = (1 + math.sqrt(5)) / 2


def signed_perms(v, even_only=False):
    out = set()
    perms = itertools.permutations(range(3))
    if even_only:
        perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    for p in perms:
        for signs in itertools.product([1, -1], repeat=3):
            q = tuple(signs[i] * v[p[i]] for i in range(3))
            out.add(tuple(round(x, 12) for x in q))
    return [np.array(x, dtype=float) for x in sorted(out)]


def polyhedron_faces(points):
    """Hull faces with coplanar triangles merged, listed CCW from outside."""
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    planes = []
    for eq in hull.equations:
        n, d = eq[:3], eq[3]
        if not any(np.allclose(n, m, atol=1e-9) and abs(d - e) < 1e-9 for m, e in planes):
            planes.append((n, d))
    faces = []
    for n, d in planes:
        idx = [i for i, p in enumerate(pts) if abs(p @ n + d) < 1e-9]
        center = pts[idx].mean(axis=0)
        u = pts[idx[0]] - center
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        idx.sort(key=lambda i: math.atan2((pts[i] - center) @ w, (pts[i] - center) @ u))
        faces.append(idx)
    return pts, faces


def write_obj(name, pts, faces, comment):
    lines = [f"# {comment}"]
    for p in pts:
        lines.append("v {:.17g} {:.17g} {:.17g}".format(*p))
    for f in faces:
        lines.append("f " + " ".join(str(i + 1) for i in f))
    (HERE / f"{name}.obj").write_text("\n".join(lines) + "\n")


def platonic():
    solids = {
        "tetrahedron": [np.array(v, float) for v in [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]],
        "cube": [np.array(v, float) for v in itertools.product([-1, 1], repeat=3)],
        "octahedron": signed_perms((1, 0, 0)),
        "icosahedron": signed_perms((0, 1, PHI), even_only=True),
        "dodecahedron": [np.array(v, float) for v in itertools.product([-1, 1], repeat=3)]
        + signed_perms((0, 1 / PHI, PHI), even_only=True),
        "rhombic_dodecahedron": [np.array(v, float) for v in itertools.product([-1, 1], repeat=3)]
        + signed_perms((2, 0, 0)),
    }
    for name, pts in solids.items():
        p, f = polyhedron_faces(pts)
        write_obj(name, p, f, name.replace("_", " "))


def pleated_fan(teeth=6, height=2.0, depth=5.0):
    ring = []
    n = 2 * teeth
    for i in range(n):
        t = 2 * math.pi * i / n
        ring.append((math.cos(t), math.sin(t), height if i % 2 == 0 else -height))
    pts = [(0.0, 0.0, 0.0)] + ring + [(0.0, 0.0, -depth)]
    bottom = n + 1
    faces = []
    for i in range(n):
        a, b = 1 + i, 1 + (i + 1) % n
        faces.append([0, a, b])
        faces.append([b, a, bottom])
    write_obj("pleated_fan", pts, faces, "closed pleated fan; vertex 1 has incident angle above 4 pi")


if __name__ == "__main__":
    platonic()
    pleated_fan()
