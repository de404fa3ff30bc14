"""Regenerate tests/fixtures/porter_vectors.tsv from NLTK's Porter stemmer.

NLTK is only needed here (``PorterStemmer.ORIGINAL_ALGORITHM`` mode); the
package itself never imports it. Words of length <= 2 are left unchanged by
the reference C implementation, so they are excluded from the sample.

Usage::

    python scripts/make_porter_fixture.py WORDLIST > tests/fixtures/porter_vectors.tsv
"""
import random
import re
import sys

from nltk.stem.porter import PorterStemmer

# Worked examples from Porter's 1980 description of the algorithm.
CLASSIC = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness
formaliti sensitiviti sensibiliti triplicate formative formalize
electriciti electrical hopeful goodness revival allowance inference airliner
gyroscopic adjustable defensible irritant replacement adjustment dependent
adoption homologou communism activate angulariti homologous effective
bowdlerize probate rate cease controll roll generalizations oscillators
""".split()


def main(path, n_sample=900, seed=1980):
    words = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            w = line.split()[0].lower() if line.strip() else ""
            if re.fullmatch(r"[a-z]{3,}", w):
                words.append(w)
    rng = random.Random(seed)
    sample = sorted(set(rng.sample(sorted(set(words)), n_sample)) - set(CLASSIC))
    ps = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    print("# word\tstem  (Porter 1980 original rules; generated by scripts/make_porter_fixture.py)")
    for w in CLASSIC + sample:
        print(f"{w}\t{ps.stem(w)}")


if __name__ == "__main__":
    main(sys.argv[1])
