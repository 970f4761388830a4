"""Transcribe the three distance tables from the LaTeX source into CSV.

Dev-time helper; the CSVs it writes are committed under
src/bandpath/atlas/data and are the runtime source of truth.
"""
import argparse
import csv
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "src" / "bandpath" / "atlas" / "data"

CELL = re.compile(
    r"^(?P<val>\d+(?:,\d+)*)"
    r"(?:\^\{?(?P<dag>(?:\\dagger)+)\}?)?"
    r"(?:\((?P<meth>IV|V|III|II|I)?(?P<inter>[^()]*)\))?"
    r"(?P<star>\**)$"
)


def norm_name(s):
    s = s.replace("$", "").replace("\\sharp", "#").replace("\\sqcup", "U")
    s = s.replace("{", "").replace("}", "").replace(" ", "")
    # 2_1^2 -> 2^2_1
    s = re.sub(r"(\d+)_(\d+)\^(\d+)", r"\1^\3_\2", s)
    return s


def parse_cell(raw):
    s = raw.replace("$", "").replace(" ", "")
    # "4^\dagger(0_1)" and "4^{\dagger\dagger}(0_1)"
    s = s.replace("^\\dagger", "^{\\dagger}")
    m = CELL.match(s)
    if not m:
        raise ValueError(raw)
    dag = (m.group("dag") or "").count("\\dagger")
    inter = m.group("inter")
    return {
        "value_or_set": m.group("val").replace(",", ";"),
        "method": m.group("meth") or "",
        "intermediate": norm_name(inter) if inter else "",
        "correction": "+" * dag,
        "star": m.group("star"),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("source", type=Path, help="LaTeX/markdown file holding the six tabular blocks")
    src = ap.parse_args().source.read_text()
    blocks = re.findall(r"\\begin\{tabular\}\{[^}]*\}(.*?)\\end\{tabular\}", src, re.S)
    assert len(blocks) == 6, len(blocks)
    tables = {1: [], 2: [], 3: []}
    for bi, body in enumerate(blocks):
        which = bi // 2 + 1
        rows = [r.replace("\\hline", "") for r in body.split("\\\\")]
        rows = [[" ".join(c.split()) for c in r.split("&")] for r in rows if r.strip()]
        header = [norm_name(c) for c in rows[0][1:]]
        for r in rows[1:]:
            rname = norm_name(r[0])
            for col, raw in zip(header, r[1:]):
                if not raw:
                    continue
                e = parse_cell(raw)
                e.update(row=rname, col=col)
                tables[which].append(e)
    fields = ["row", "col", "value_or_set", "method", "intermediate", "correction", "star"]
    for which, entries in tables.items():
        with open(OUT / f"table{which}.csv", "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
            w.writeheader()
            for e in entries:
                w.writerow({k: e[k] for k in fields})
        print(which, len(entries), file=sys.stderr)


if __name__ == "__main__":
    main()
