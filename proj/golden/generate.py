"""Writes the golden files compared by `dyckres selftest`.

Every value here is typed in by hand or computed from
closed formulas; none is produced by the library itself.
"""
import itertools
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def part(p):
    return ",".join(str(x) for x in p)


def series(terms):
    out = []
    for deg, c in terms:
        coeff = "" if c == 1 else str(c)
        out.append(f"{coeff}t^{deg}")
    return " + ".join(out)


def betti_ascii(rows):
    ncols = max(len(r) for r in rows.values())
    labels = {r: f"{r}:" for r in rows}
    lw = max(len(s) for s in labels.values())
    cell = lambda v: "." if v == 0 else str(v)
    widths = [max([len(str(i))] + [len(cell(rows[r][i])) for r in rows]) for i in range(ncols)]
    lines = [" " * lw + "".join(" " + str(i).rjust(w) for i, w in enumerate(widths))]
    for r in sorted(rows):
        lines.append(labels[r].rjust(lw) + "".join(" " + cell(v).rjust(w) for v, w in zip(rows[r], widths)))
    return "\n".join(lines) + "\n"


def regularity_closed(lam, n):
    lam = list(lam) + [0] * (n - len(lam)) + [-1]
    return max(n * lam[p - 1] + (p - 2) * (n - p) for p in range(1, n + 1) if lam[p - 1] > lam[p])


def main():
    table = {
        5: [225, 1132, 2673, 3807, 3485, 2016, 675, 100, 0],
        6: [0, 0, 0, 1, 0, 9, 16, 9, 0],
        7: [0, 0, 0, 0, 0, 0, 0, 0, 1],
    }
    (HERE / "betti_3_2_m3_n3.txt").write_text(betti_ascii(table))

    hilbert = [
        ((3, 2), [(5, 225), (6, 1132), (7, 2673), (8, 3582), (9, 2785), (10, 1188), (11, 225)]),
        ((4, 4), [(8, 225), (9, 700), (10, 828), (11, 450), (12, 100)]),
        ((3, 3, 3), [(9, 1)]),
        ((4, 4, 3), [(11, 9), (12, 16), (13, 9)]),
        ((5, 5, 5), [(15, 1)]),
    ]
    (HERE / "hilbert_m3_n3.txt").write_text("".join(f"{part(mu)}: {series(t)}\n" for mu, t in hilbert))

    kac = [(3, 2), (4, 2), (3, 3), (3, 2, 1), (4, 3), (3, 3, 1), (4, 2, 1), (4, 3, 1), (4, 4), (4, 4, 1)]
    (HERE / "kac_composition_3_2_n3.txt").write_text("".join(f"{part(mu)} 1\n" for mu in sorted(kac)))

    patterns = [((3, 2), 0, 0), ((4, 4), 3, 0), ((3, 3, 3), 3, 1), ((4, 4, 3), 5, 1), ((5, 5, 5), 8, 2)]
    patterns.sort(key=lambda e: (sum(e[0]), e[0], e[1]))
    (HERE / "patterns_A_3_2_n3.txt").write_text("".join(f"{part(mu)} d={d} b={b}\n" for mu, d, b in patterns))

    lines = []
    for n in range(1, 4):
        padded = [p for p in itertools.product(range(5), repeat=n) if all(p[i] >= p[i + 1] for i in range(n - 1))]
        for p in sorted(padded):
            lam = tuple(x for x in p if x > 0)
            lines.append(f"n={n} lambda={part(lam)} reg={regularity_closed(lam, n)}\n")
    (HERE / "regularity_grid.txt").write_text("".join(lines))


if __name__ == "__main__":
    main()
