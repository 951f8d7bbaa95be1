#!/usr/bin/env python3
"""Generate the bundled English-German toy corpus with gold CoNLL-U trees.

The corpus mixes bisentences that are eligible for both swap types with
controlled violations of each constraint (missing/duplicated edges, POS
mismatches, pronoun-only subtrees, non-projective attachments), so pipeline
tests can assert exact eligibility and rejection counts. Output is fully
deterministic; the generated files are committed under tests/data/.
"""

from __future__ import annotations

import sys
from pathlib import Path

from treeswap.corpus import Token, make_sentence, write_conllu

# (en, de, gender) noun pairs; gender drives the German article/adjective form.
NOUNS = [
    ("dog", "Hund", "m"),
    ("cat", "Katze", "f"),
    ("book", "Buch", "n"),
    ("letter", "Brief", "m"),
    ("teacher", "Lehrer", "m"),
    ("apple", "Apfel", "m"),
    ("song", "Lied", "n"),
    ("house", "Haus", "n"),
    ("garden", "Garten", "m"),
    ("child", "Kind", "n"),
    ("woman", "Frau", "f"),
    ("man", "Mann", "m"),
    ("bread", "Brot", "n"),
    ("story", "Geschichte", "f"),
    ("car", "Auto", "n"),
]
PROPNS = [("Mary", "Maria"), ("John", "Johann"), ("Anna", "Anna"), ("Peter", "Peter")]
VERBS = [
    ("sees", "sieht"),
    ("reads", "liest"),
    ("finds", "findet"),
    ("loves", "liebt"),
    ("buys", "kauft"),
    ("paints", "malt"),
    ("carries", "trägt"),
    ("hears", "hört"),
]
ADJS = [("old", "alt"), ("red", "rot"), ("small", "klein"), ("new", "neu")]
ADVS = [("today", "heute"), ("quickly", "schnell")]

NOM_ARTICLE = {"m": "der", "f": "die", "n": "das"}
ACC_ARTICLE = {"m": "den", "f": "die", "n": "das"}


def de_adj(base: str, gender: str, case: str) -> str:
    if case == "acc" and gender == "m":
        return base + "en"
    return base + "e"


def rows(*specs):
    """specs: (form, upos, head, deprel) tuples; SpaceAfter=No before final punct."""
    tokens = []
    for i, (form, upos, head, deprel) in enumerate(specs, start=1):
        space_after = not (i == len(specs) - 1 and specs[-1][1] == "PUNCT")
        tokens.append(
            Token(
                index=i,
                form=form,
                upos=upos,
                head=head,
                deprel=deprel,
                space_after=space_after,
            )
        )
    return tokens


class Builder:
    def __init__(self):
        self.en = []
        self.de = []

    def add(self, en_rows, de_rows):
        idx = len(self.en)
        self.en.append(make_sentence(en_rows, sent_id=f"toy-{idx:04d}"))
        self.de.append(make_sentence(de_rows, sent_id=f"toy-{idx:04d}"))


def simple_transitive(b: Builder, subj, verb, obj):
    """The <subj> <verb>s the <obj> . / Der <Subj> <verb>t den <Obj> ."""
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            (en_o, "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 5, "det"),
            (de_o.capitalize(), "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def propn_subject(b: Builder, name, verb, obj):
    en_n, de_n = name
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            (en_n, "PROPN", 2, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 4, "det"),
            (en_o, "NOUN", 2, "obj"),
            (".", "PUNCT", 2, "punct"),
        ),
        rows(
            (de_n, "PROPN", 2, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 4, "det"),
            (de_o.capitalize(), "NOUN", 2, "obj"),
            (".", "PUNCT", 2, "punct"),
        ),
    )


def pron_subject(b: Builder, pron, verb, obj):
    """Subject is a bare pronoun: object swap eligible, subject swap is not."""
    en_p, de_p = pron
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            (en_p, "PRON", 2, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 4, "det"),
            (en_o, "NOUN", 2, "obj"),
            (".", "PUNCT", 2, "punct"),
        ),
        rows(
            (de_p, "PRON", 2, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 4, "det"),
            (de_o.capitalize(), "NOUN", 2, "obj"),
            (".", "PUNCT", 2, "punct"),
        ),
    )


def adjective_object(b: Builder, subj, verb, adj, obj):
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_a, de_a = adj
    en_o, de_o, g_o = obj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 6, "det"),
            (en_a, "ADJ", 6, "amod"),
            (en_o, "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 6, "det"),
            (de_adj(de_a, g_o, "acc"), "ADJ", 6, "amod"),
            (de_o.capitalize(), "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def pp_subject(b: Builder, subj, place, verb, obj):
    """The <subj> in the <place> <verb>s the <obj> ."""
    en_s, de_s, g_s = subj
    en_p, de_p, g_p = place
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 6, "nsubj"),
            ("in", "ADP", 5, "case"),
            ("the", "DET", 5, "det"),
            (en_p, "NOUN", 2, "nmod"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 8, "det"),
            (en_o, "NOUN", 6, "obj"),
            (".", "PUNCT", 6, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 6, "nsubj"),
            ("in", "ADP", 5, "case"),
            ("dem", "DET", 5, "det"),
            (de_p.capitalize(), "NOUN", 2, "nmod"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 8, "det"),
            (de_o.capitalize(), "NOUN", 6, "obj"),
            (".", "PUNCT", 6, "punct"),
        ),
    )


def pp_object(b: Builder, subj, verb, obj, extra):
    """<Name> <verb>s the <obj> with the <extra> ."""
    en_n, de_n = subj
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    en_x, de_x, g_x = extra
    b.add(
        rows(
            (en_n, "PROPN", 2, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 4, "det"),
            (en_o, "NOUN", 2, "obj"),
            ("with", "ADP", 7, "case"),
            ("the", "DET", 7, "det"),
            (en_x, "NOUN", 4, "nmod"),
            (".", "PUNCT", 2, "punct"),
        ),
        rows(
            (de_n, "PROPN", 2, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 4, "det"),
            (de_o.capitalize(), "NOUN", 2, "obj"),
            ("mit", "ADP", 7, "case"),
            ("dem", "DET", 7, "det"),
            (de_x.capitalize(), "NOUN", 4, "nmod"),
            (".", "PUNCT", 2, "punct"),
        ),
    )


def with_adverb(b: Builder, subj, verb, obj, adv):
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    en_adv, de_adv = adv
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            (en_o, "NOUN", 3, "obj"),
            (en_adv, "ADV", 3, "advmod"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 5, "det"),
            (de_o.capitalize(), "NOUN", 3, "obj"),
            (de_adv, "ADV", 3, "advmod"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def german_ovs(b: Builder, name, verb, obj):
    """SVO English against object-fronted German; exercises recasing."""
    en_n, de_n = name
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            (en_n, "PROPN", 2, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 4, "det"),
            (en_o, "NOUN", 2, "obj"),
            (".", "PUNCT", 2, "punct"),
        ),
        rows(
            (ACC_ARTICLE[g_o].capitalize(), "DET", 2, "det"),
            (de_o.capitalize(), "NOUN", 3, "obj"),
            (de_v, "VERB", 0, "root"),
            (de_n, "PROPN", 3, "nsubj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def propn_object(b: Builder, subj, verb, name):
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_n, de_n = name
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            (en_n, "PROPN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (de_n, "PROPN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def intransitive(b: Builder, subj):
    """No obj edge at all."""
    en_s, de_s, g_s = subj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            ("sleeps", "VERB", 0, "root"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            ("schläft", "VERB", 0, "root"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def double_object(b: Builder, subj, verb, obj1, obj2):
    """Two obj edges on both sides."""
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_o1, de_o1, g_o1 = obj1
    en_o2, de_o2, g_o2 = obj2
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            (en_o1, "NOUN", 3, "obj"),
            ("the", "DET", 7, "det"),
            (en_o2, "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o1], "DET", 5, "det"),
            (de_o1.capitalize(), "NOUN", 3, "obj"),
            (ACC_ARTICLE[g_o2], "DET", 7, "det"),
            (de_o2.capitalize(), "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def imperative(b: Builder, verb, obj):
    """No nsubj edge."""
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    en_stem = en_v[:-1].capitalize()
    b.add(
        rows(
            (en_stem, "VERB", 0, "root"),
            ("the", "DET", 3, "det"),
            (en_o, "NOUN", 1, "obj"),
            ("!", "PUNCT", 1, "punct"),
        ),
        rows(
            (de_v.capitalize(), "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 3, "det"),
            (de_o.capitalize(), "NOUN", 1, "obj"),
            ("!", "PUNCT", 1, "punct"),
        ),
    )


def double_subject(b: Builder, subj1, subj2, verb, obj):
    """Two nsubj edges on both sides (synthetic constraint fixture)."""
    en_s1, de_s1, g1 = subj1
    en_s2, de_s2, g2 = subj2
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s1, "NOUN", 5, "nsubj"),
            ("the", "DET", 4, "det"),
            (en_s2, "NOUN", 5, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 7, "det"),
            (en_o, "NOUN", 5, "obj"),
            (".", "PUNCT", 5, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g1].capitalize(), "DET", 2, "det"),
            (de_s1.capitalize(), "NOUN", 5, "nsubj"),
            (NOM_ARTICLE[g2], "DET", 4, "det"),
            (de_s2.capitalize(), "NOUN", 5, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 7, "det"),
            (de_o.capitalize(), "NOUN", 5, "obj"),
            (".", "PUNCT", 5, "punct"),
        ),
    )


def pos_mismatch_object(b: Builder, subj, verb):
    """English noun object against German pronoun object."""
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            ("man", "NOUN", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            ("ihn", "PRON", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def nonprojective_subject(b: Builder, subj, verb, obj):
    """A trailing modifier attached back into the subject: gap in the span."""
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            (en_o, "NOUN", 3, "obj"),
            ("outside", "ADV", 2, "advmod"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 5, "det"),
            (de_o.capitalize(), "NOUN", 3, "obj"),
            ("draußen", "ADV", 2, "advmod"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def nonprojective_object(b: Builder, subj, verb, obj):
    """Gap inside the object span instead."""
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_o, de_o, g_o = obj
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            (en_o, "NOUN", 3, "obj"),
            ("quickly", "ADV", 3, "advmod"),
            ("today", "ADV", 5, "advmod"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (ACC_ARTICLE[g_o], "DET", 5, "det"),
            (de_o.capitalize(), "NOUN", 3, "obj"),
            ("schnell", "ADV", 3, "advmod"),
            ("heute", "ADV", 5, "advmod"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def pron_object(b: Builder, subj, verb, pron):
    """Pronoun object on both sides: POS tags match but no noun in the subtree."""
    en_s, de_s, g_s = subj
    en_v, de_v = verb
    en_p, de_p = pron
    b.add(
        rows(
            ("The", "DET", 2, "det"),
            (en_s, "NOUN", 3, "nsubj"),
            (en_v, "VERB", 0, "root"),
            (en_p, "PRON", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
        rows(
            (NOM_ARTICLE[g_s].capitalize(), "DET", 2, "det"),
            (de_s.capitalize(), "NOUN", 3, "nsubj"),
            (de_v, "VERB", 0, "root"),
            (de_p, "PRON", 3, "obj"),
            (".", "PUNCT", 3, "punct"),
        ),
    )


def build() -> Builder:
    b = Builder()
    n = NOUNS
    v = VERBS
    p = PROPNS
    a = ADJS

    for i in range(40):
        simple_transitive(b, n[i % 15], v[i % 8], n[(i + 4) % 15])
    for i in range(24):
        propn_subject(b, p[i % 4], v[(i + 3) % 8], n[(i + 7) % 15])
    prons = [("He", "Er"), ("She", "Sie"), ("It", "Es")]
    for i in range(20):
        pron_subject(b, prons[i % 3], v[(i + 5) % 8], n[(i + 2) % 15])
    for i in range(24):
        adjective_object(b, n[(i + 1) % 15], v[i % 8], a[i % 4], n[(i + 9) % 15])
    for i in range(16):
        pp_subject(b, n[i % 15], n[(i + 8) % 15], v[(i + 1) % 8], n[(i + 3) % 15])
    for i in range(12):
        pp_object(b, p[(i + 1) % 4], v[(i + 2) % 8], n[(i + 5) % 15], n[(i + 11) % 15])
    for i in range(16):
        with_adverb(b, n[(i + 6) % 15], v[(i + 4) % 8], n[(i + 12) % 15], ADVS[i % 2])
    for i in range(12):
        german_ovs(b, p[(i + 2) % 4], v[(i + 6) % 8], n[(i + 1) % 15])
    for i in range(12):
        propn_object(b, n[(i + 3) % 15], v[(i + 7) % 8], p[i % 4])
    for i in range(6):
        intransitive(b, n[(i + 10) % 15])
    for i in range(4):
        double_object(b, n[i % 15], v[i % 8], n[(i + 5) % 15], n[(i + 6) % 15])
    for i in range(4):
        imperative(b, v[(i + 1) % 8], n[(i + 13) % 15])
    for i in range(4):
        double_subject(b, n[i % 15], n[(i + 7) % 15], v[(i + 2) % 8], n[(i + 14) % 15])
    for i in range(4):
        pos_mismatch_object(b, n[(i + 2) % 15], v[(i + 3) % 8])
    for i in range(4):
        nonprojective_subject(b, n[(i + 4) % 15], v[(i + 5) % 8], n[(i + 8) % 15])
    for i in range(4):
        nonprojective_object(b, n[(i + 9) % 15], v[(i + 6) % 8], n[(i + 10) % 15])
    obj_prons = [("him", "ihn"), ("her", "sie")]
    for i in range(2):
        pron_object(b, n[(i + 11) % 15], v[i % 8], obj_prons[i % 2])
    return b


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data")
    out_dir.mkdir(parents=True, exist_ok=True)
    b = build()
    write_conllu(b.en, str(out_dir / "toy.en.conllu"))
    write_conllu(b.de, str(out_dir / "toy.de.conllu"))
    print(f"wrote {len(b.en)} bisentences to {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
