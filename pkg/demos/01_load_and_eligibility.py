"""Walk through corpus loading and the four swap constraints.

Reads the bundled toy corpus, pairs the two sides positionally, and shows
which bisentences qualify for object/subject swapping and why the rest are
rejected.
"""

from pathlib import Path

from treeswap import align_bitext, check_eligibility, detokenize, read_conllu
from treeswap.eligibility import EligiblePair
from treeswap.sampling import build_pool

DATA = Path(__file__).parent.parent / "tests" / "data"

en = read_conllu(str(DATA / "toy.en.conllu"))
de = read_conllu(str(DATA / "toy.de.conllu"))
corpus = align_bitext(en, de)
print(f"loaded {len(corpus)} bisentences")
print("first pair:")
print("  en:", detokenize(corpus[0].source.tokens))
print("  de:", detokenize(corpus[0].target.tokens))

for swap_type in ("object", "subject"):
    pool, stats = build_pool(corpus, swap_type)
    print(f"\n{swap_type} swaps: {stats.eligible} eligible")
    for reason, count in sorted(stats.rejections.items()):
        print(f"  rejected {reason}: {count}")

# A single pair in detail: the extracted spans.
result = check_eligibility(corpus[0], "object")
assert isinstance(result, EligiblePair)
lo, hi = result.src_subtree.span
src_span = corpus[0].source.tokens[lo - 1 : hi]
print("\nobject span of pair 0 (en):", " ".join(t.form for t in src_span))
lo, hi = result.tgt_subtree.span
tgt_span = corpus[0].target.tokens[lo - 1 : hi]
print("object span of pair 0 (de):", " ".join(t.form for t in tgt_span))
