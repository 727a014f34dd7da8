"""Print the hand-checkable examples: structure of the two-conflict and p, !p, !p | q bases, verdict tables, LP_m cases."""

from occlogic.formula import parse, parse_query
from occlogic.lpm import lpm_entails, minimal_lpm_models
from occlogic.osem import a_minimal_omodels
from occlogic.query import RELATIONS, decide_all
from occlogic.relations import enumerate_bmcrs, enumerate_mcrs, enumerate_mirs, pn_pairs


def show_structure(title, base):
    print(f"== {title}: {base.text()}")
    print("  occurrences:", " ".join(o.label for o in base.occurrences))
    for name, rels in (("MIR", enumerate_mirs(base)), ("MCR", enumerate_mcrs(base)),
                       ("BMCR", enumerate_bmcrs(base))):
        for r in rels:
            pn = sorted(pn_pairs(base, r))
            print(f"  {name:<4} {r.describe(base)}  PN={pn}")


def show_table(base, queries):
    print("  " + "query".ljust(32) + " ".join(f"{r:>9}" for r in RELATIONS))
    for q in queries:
        row = decide_all(base, parse_query(q))
        print("  " + q.ljust(32) + " ".join(f"{'yes' if row[r] else 'no':>9}" for r in RELATIONS))


def main() -> None:
    two = parse("p & q\n!p & r\n!q | !r")
    disj = parse("p\n!p\n!p | q")
    show_structure("two conflicts", two)
    show_structure("p, !p, !p | q", disj)
    show_table(disj, ["p", "q"])

    sep = parse("p\n!p\nq | r")
    print(f"== separation base {sep.text()}")
    for mu in a_minimal_omodels(sep):
        print("  a-minimal:", mu.labelled(sep))
    show_table(sep, ["(!p & (!q | !r)) | (p & q & r)"])

    print("== LP_m")
    for text, q in (("p\n!p", "p & !p"), ("p\n!p\n!p | q", "q"),
                    ("p\n!p\n!q", "(p | q) & !p"), ("p\n!p\n!q", "q & !p")):
        base = parse(text)
        verdict = lpm_entails(base, parse_query(q)).holds
        models = ", ".join(m.describe() for m in minimal_lpm_models(base))
        print(f"  {base.text()} |- {q}: {'yes' if verdict else 'no'}   minimal models: {models}")


if __name__ == "__main__":
    main()
