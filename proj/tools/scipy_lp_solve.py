#!/usr/bin/env python3
"""Minimal LP-file front end for scipy's HiGHS solver.

Usage: scipy_lp_solve.py INPUT.lp OUTPUT.sol

Reads a CPLEX-style LP file (Minimize / Subject To / Bounds / Binaries /
End), solves the continuous relaxation with scipy.optimize.linprog and
writes a one-line solution file. Meant as the external cross-check command:

    TTP_EXT_SOLVER='python3 tools/scipy_lp_solve.py {input} {output}'
"""

import re
import sys

import numpy as np
from scipy.optimize import linprog


def tokenize(text):
    text = re.sub(r"\\[^\n]*", " ", text)
    text = re.sub(r"([:<>=])", r" \1 ", text).replace("<  =", "<=").replace(">  =", ">=")
    text = text.replace("< =", "<=").replace("> =", ">=")
    return text.split()


NUM = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
SECTIONS = {
    "minimize": "obj", "maximize": "obj", "min": "obj", "max": "obj",
    "subject": "rows", "st": "rows", "s.t.": "rows",
    "bounds": "bounds", "binaries": "skipvars", "binary": "skipvars",
    "bin": "skipvars", "generals": "skipvars", "general": "skipvars",
    "end": "end",
}


def parse_terms(tokens):
    terms, sign, coef, pending = [], 1.0, 1.0, False
    for tok in tokens:
        if tok == "+":
            continue
        if tok == "-":
            sign = -sign if pending else -1.0
            pending = True
            continue
        if NUM.match(tok):
            coef = float(tok)
            pending = True
            continue
        terms.append((tok, sign * coef))
        sign, coef, pending = 1.0, 1.0, False
    return terms


def main():
    if len(sys.argv) != 3:
        sys.exit("usage: scipy_lp_solve.py INPUT.lp OUTPUT.sol")
    tokens = tokenize(open(sys.argv[1]).read())

    objective, rows, bounds = [], [], {}
    pos, section, minimize = 0, None, True
    while pos < len(tokens):
        key = tokens[pos].lower()
        if key in SECTIONS:
            section = SECTIONS[key]
            minimize = minimize if section != "obj" else not key.startswith("max")
            pos += 2 if key == "subject" else 1
            continue
        if section == "obj":
            start = pos
            while pos < len(tokens) and tokens[pos].lower() not in SECTIONS:
                pos += 1
            body = tokens[start:pos]
            if len(body) > 1 and body[1] == ":":
                body = body[2:]
            objective = parse_terms(body)
        elif section == "rows":
            assert tokens[pos + 1] == ":", f"expected row label near {tokens[pos]}"
            name, pos = tokens[pos], pos + 2
            start = pos
            while tokens[pos] not in ("<=", ">=", "="):
                pos += 1
            rows.append((name, parse_terms(tokens[start:pos]), tokens[pos], float(tokens[pos + 1])))
            pos += 2
        elif section == "bounds":
            lo, var, hi = float(tokens[pos]), tokens[pos + 2], float(tokens[pos + 4])
            assert tokens[pos + 1] == tokens[pos + 3] == "<="
            bounds[var] = (lo, hi)
            pos += 5
        elif section == "skipvars":
            pos += 1
        else:
            sys.exit(f"unparsed token {tokens[pos]}")

    names = sorted({v for v, _ in objective} | {v for _, t, _, _ in rows for v, _ in t} | set(bounds))
    index = {v: k for k, v in enumerate(names)}
    c = np.zeros(len(names))
    for v, coef in objective:
        c[index[v]] += coef if minimize else -coef
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for _, terms, sense, rhs in rows:
        row = np.zeros(len(names))
        for v, coef in terms:
            row[index[v]] += coef
        if sense == "=":
            a_eq.append(row)
            b_eq.append(rhs)
        else:
            a_ub.append(row if sense == "<=" else -row)
            b_ub.append(rhs if sense == "<=" else -rhs)
    var_bounds = [bounds.get(v, (0.0, None)) for v in names]

    res = linprog(c, A_ub=np.array(a_ub) if a_ub else None, b_ub=b_ub or None,
                  A_eq=np.array(a_eq) if a_eq else None, b_eq=b_eq or None,
                  bounds=var_bounds, method="highs")
    with open(sys.argv[2], "w") as out:
        if res.status == 0:
            value = res.fun if minimize else -res.fun
            out.write(f"Status: OPTIMAL\nObjective: obj = {value:.12g}\n")
        elif res.status == 2:
            out.write("Status: INFEASIBLE\n")
        elif res.status == 3:
            out.write("Status: UNBOUNDED\n")
        else:
            sys.exit(f"solver failed: {res.message}")


if __name__ == "__main__":
    main()
