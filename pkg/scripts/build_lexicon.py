"""Collapse a pattern-style ``en-sentiment.xml`` into the bundled lexicon TSV.

Each word form can carry several senses; polarity and subjectivity are
averaged across senses. Forms that cannot survive text normalization
(anything outside ``[a-z0-9]``) are skipped.

Usage::

    python scripts/build_lexicon.py path/to/en-sentiment.xml src/tweetsent/data/lexicon_en.tsv
"""
import re
import sys
import xml.etree.ElementTree as ET
from collections import defaultdict

_WORD = re.compile(r"^[a-z0-9]+$")


def main(src, dst):
    senses = defaultdict(list)
    for node in ET.parse(src).getroot().iter("word"):
        form = node.get("form", "").strip().lower()
        if not _WORD.match(form):
            continue
        senses[form].append((float(node.get("polarity")), float(node.get("subjectivity"))))

    with open(dst, "w", encoding="utf-8", newline="\n") as out:
        out.write("# word\tpolarity\tsubjectivity\n")
        out.write("# Derived from the pattern English sentiment lexicon (PDDL), "
                  "one row per word form, senses averaged.\n")
        for form in sorted(senses):
            pols, subs = zip(*senses[form])
            pol = round(sum(pols) / len(pols), 4)
            sub = round(sum(subs) / len(subs), 4)
            out.write(f"{form}\t{pol:g}\t{sub:g}\n")
    print(f"wrote {len(senses)} entries to {dst}")


if __name__ == "__main__":
    main(*sys.argv[1:3])
