"""Transcribe the printed Kh / v_0..v_5 table into corpus text form.

Reads the LaTeX ``array`` blocks from a source file, converts each cell to
the package's exact-fraction term syntax and prints JSON fragments for
review.  This is a one-off transcription aid; it never calls the code
under test.

    python3 scripts/transcribe_table.py SOURCE.md
"""

import json
import re
import sys
from fractions import Fraction


def split_terms(cell):
    terms, depth, cur = [], 0, ""
    for ch in cell:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip():
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur.strip():
        terms.append(cur)
    return terms


def factor(text):
    """``"125 t^2 x^5"`` -> (Fraction(125), {"t": 2, "x": 5})."""
    coeff = Fraction(1)
    exps = {}
    for num, var, e1, e2 in re.findall(r"(\d+)|([a-z])(?:\^(?:\{(-?\d+)\}|(-?\d)))?", text):
        if num:
            coeff *= int(num)
        else:
            exps[var] = exps.get(var, 0) + int(e1 or e2 or 1)
    return coeff, exps


def term(text):
    text = text.strip()
    sign = -1 if text.startswith("-") else 1
    text = text.lstrip("+-").strip()
    m = re.fullmatch(r"\\frac\{(.*?)\}\{(.*?)\}", text)
    if m:
        cn, en = factor(m.group(1))
        cd, ed = factor(m.group(2))
        exps = dict(en)
        for v, e in ed.items():
            exps[v] = exps.get(v, 0) - e
        return sign * cn / cd, exps
    c, exps = factor(text)
    return sign * c, exps


def to_text(cell, variables):
    out = []
    for t in split_terms(cell):
        c, exps = term(t)
        mono = "*".join(f"{v}^{exps[v]}" for v in sorted(exps) if exps[v])
        out.append(f"{c}*{mono}" if mono else str(c))
    return " + ".join(out).replace("+ -", "- ")


def main(path):
    src = open(path).read()
    blocks = re.findall(r"\\begin\{array\}\{\|c\|c\|\}(.*?)\\end\{array\}", src, re.S)
    result = {}
    for block in blocks:
        rows = [r for r in re.split(r"\\\\\s*\\hline", block) if "&" in r]
        cells = {}
        for r in rows:
            label, value = r.split("&", 1)
            label = label.replace("\\hline", "").replace("\\text{Knot}", "Knot").replace("\\text{Kh}", "Kh").strip()
            cells[label] = " ".join(value.split())
        name = cells.pop("Knot")
        result[name] = {
            "kh": to_text(cells["Kh"], ("q", "t")),
            "vn": [to_text(cells[f"v_{n}"], ("t", "x")) for n in range(6)],
        }
    json.dump(result, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: transcribe_table.py SOURCE.md")
    main(sys.argv[1])
