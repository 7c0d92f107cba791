"""Independent sympy recomputation of the frozen manifest reports.

Each manifest is rebuilt in sympy from its JSON text; the Christoffel symbols,
Riemann tensor, Ricci tensor, scalar curvature, Einstein tensor, EFE residual
and geodesic residuals are computed with the textbook index formulas and
compared against manifests/*.report.json. Algebraic generators are eliminated
by substituting their radical (only square roots occur in the bundled files).

With --sample N, values are compared exactly at N random rational points
instead of by symbolic cancellation, which keeps kerr_family tractable.
Run: python3 tests/oracles/golden_oracle.py [--sample N] [manifest-stem ...]
"""
import itertools
import json
import pathlib
import sys

import random

import sympy as sp

ROOT = pathlib.Path(__file__).resolve().parents[2] / "manifests"


def parse(text, names):
    return sp.sympify(text.replace("^", "**"), locals=names)


def tensor_from_report(entry, shape, names):
    out = {}
    for c in entry["components"]:
        out[tuple(i - 1 for i in c["index"])] = parse(c["value"], names)
    return lambda *idx: out.get(tuple(idx), 0)


SAMPLES = 0
SIMPLIFY = sp.cancel


def same(a, b, elim):
    diff = (sp.sympify(a) - sp.sympify(b)).subs(elim)
    if not SAMPLES:
        return sp.cancel(sp.together(diff)) == 0
    rng = random.Random(1729)
    syms = sorted(diff.free_symbols, key=str)
    checked = 0
    while checked < SAMPLES:
        point = {v: sp.Rational(rng.randint(-40, 40), rng.randint(1, 17)) for v in syms}
        value = diff.subs(point)
        if value.has(sp.zoo, sp.nan, sp.oo):
            continue
        if value != 0:
            return False
        checked += 1
    return True


def check_manifest(path):
    doc = json.loads(path.read_text())
    report = json.loads(path.with_name(path.stem + ".report.json").read_text())["results"]
    alg = doc["algebra"]
    gens = alg["generators"]
    basis = alg.get("transcendence_basis", gens)
    names = {n: sp.Symbol(n) for n in doc.get("base_constants", []) + gens}
    coords = [names[b] for b in basis]
    elim = {}
    for gen, rel in zip([g for g in gens if g not in basis], alg.get("relations", [])):
        lhs, rhs = rel.split("=")
        sol = sp.solve(parse(lhs, names) - parse(rhs, names), names[gen])
        elim[names[gen]] = sol[-1]
    n = len(coords)
    failures = []

    def expect(label, got, want):
        if not same(got, want, elim):
            failures.append(f"{path.name}: {label}: engine {got} oracle {sp.simplify(want)}")

    g = sp.Matrix(n, n, lambda i, j: parse(doc["metric"][i][j], names).subs(elim))
    ginv = g.inv().applyfunc(sp.cancel)
    d = lambda e, k: sp.diff(e, coords[k])
    gam = {(k, i, j): SIMPLIFY(sum(ginv[k, l] * (d(g[l, i], j) + d(g[l, j], i) - d(g[i, j], l)) for l in range(n)) / 2)
           for k, i, j in itertools.product(range(n), repeat=3)}

    if "christoffel" in report:
        got = tensor_from_report(report["christoffel"]["christoffel"], 3, names)
        for k, i, j in itertools.product(range(n), repeat=3):
            expect(f"Gamma^{k+1}_{i+1}{j+1}", got(k, i, j), gam[k, i, j])
        got = tensor_from_report(report["christoffel"]["inverse_metric"], 2, names)
        for i, j in itertools.product(range(n), repeat=2):
            expect(f"g^{i+1}{j+1}", got(i, j), ginv[i, j])

    if "curvature" in report or "efe" in report:
        riem = {}
        for p, l, i, j in itertools.product(range(n), repeat=4):
            riem[p, l, i, j] = SIMPLIFY(d(gam[p, j, l], i) - d(gam[p, i, l], j) + sum(
                gam[p, i, m] * gam[m, j, l] - gam[p, j, m] * gam[m, i, l] for m in range(n)))
        ric = sp.Matrix(n, n, lambda j, l: SIMPLIFY(sum(riem[p, l, p, j] for p in range(n))))
        S = SIMPLIFY(sum(ginv[i, j] * ric[i, j] for i in range(n) for j in range(n)))
        ein = (ric - S * g / 2).applyfunc(SIMPLIFY)
        if "curvature" in report:
            r = report["curvature"]
            got = tensor_from_report(r["riemann"], 4, names)
            for p, i, j, l in itertools.product(range(n), repeat=4):
                expect(f"R^{p+1}_{l+1}{i+1}{j+1}", got(p, i, j, l), riem[p, l, i, j])
            got = tensor_from_report(r["ricci"], 2, names)
            for i, j in itertools.product(range(n), repeat=2):
                expect(f"Ric_{i+1}{j+1}", got(i, j), ric[i, j])
            expect("S", parse(r["scalar_curvature"], names), S)
        if "efe" in report:
            lam = parse(doc.get("lambda", "0"), names)
            kap = parse(doc.get("kappa", "1"), names)
            T = sp.zeros(n, n)
            if "stress_energy" in doc:
                T = sp.Matrix(n, n, lambda i, j: parse(doc["stress_energy"][i][j], names))
            got = tensor_from_report(report["efe"]["residual"], 2, names)
            for i, j in itertools.product(range(n), repeat=2):
                expect(f"EFE_{i+1}{j+1}", got(i, j), ein[i, j] + lam * g[i, j] - kap * T[i, j])

    if "geodesic" in report:
        par = sp.Symbol(doc.get("curve_parameter", "t"))
        locs = dict(names, **{str(par): par})
        for name, images in doc["curves"].items():
            c = {names[k]: parse(v, locs) for k, v in images.items()}
            vel = [sp.diff(c[x], par) for x in coords]
            res = report["geodesic"]["curves"][name]["residual"]
            for k in range(n):
                want = sp.diff(vel[k], par) + sum(gam[k, i, j].subs(c) * vel[i] * vel[j] for i in range(n) for j in range(n))
                expect(f"{name} residual[{k}]", parse(res[k], locs), want)
    return failures


def main():
    failures = []
    global SAMPLES, SIMPLIFY
    args = sys.argv[1:]
    if args[:1] == ["--sample"]:
        SAMPLES, SIMPLIFY, args = int(args[1]), (lambda e: e), args[2:]
    wanted = set(args)
    for path in sorted(ROOT.glob("*.json")):
        if path.name.endswith(".report.json") or (wanted and path.stem not in wanted):
            continue
        f = check_manifest(path)
        print(f"{path.name}: {'ok' if not f else 'MISMATCH'}", flush=True)
        failures += f
    for f in failures:
        print(f)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
