#!/usr/bin/env python3
"""Reference feature values for the micro corpus.

Straight-line recomputation of every feature from CoNLL-U text, resource
lists and sidecar files. Shares no code with the C++ engine. Prints a CSV
(doc_id,feature,value) with repr() floats; empty value = missing.
"""
import csv
import json
import math
import sys
from pathlib import Path

VOWELS = set("aeiouy")


def is_letter(c):
    return (c.isascii() and c.isalpha()) or ord(c) > 127


def alphabetic(tok):
    # letters, apostrophes and hyphens, starting and ending with a letter
    if tok["upos"] in ("PUNCT", "SYM"):
        return False
    f = tok["form"]
    return (bool(f) and is_letter(f[0]) and is_letter(f[-1])
            and all(is_letter(c) or c in "'-" for c in f))


def read_conllu(path):
    sents, cur, par, pending = [], [], 0, False
    first = True
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            if line.startswith("# newpar") or line.startswith("# newdoc"):
                pending = True
            continue
        if not line.strip():
            if cur:
                if pending and not first:
                    par += 1
                sents.append({"tokens": cur, "par": par})
                cur, pending, first = [], False, False
            continue
        c = line.split("\t")
        if "-" in c[0] or "." in c[0]:
            continue
        feats = {}
        if c[5] != "_":
            for kv in c[5].split("|"):
                k, v = kv.split("=", 1)
                feats[k] = v
        cur.append({"id": int(c[0]), "form": c[1], "lemma": c[2], "upos": c[3], "feats": feats,
                    "head": int(c[6]), "deprel": c[7]})
    if cur:
        if pending and not first:
            par += 1
        sents.append({"tokens": cur, "par": par})
    return sents


def words(path):
    out = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(line.lower())
    return out


def load_resources(d):
    d = Path(d)
    res = {"gsl1": words(d / "gsl_1000.txt"), "gsl2": words(d / "gsl_2000.txt"), "awl": words(d / "awl.txt"),
           "emph": words(d / "emphatics.txt"), "deic": words(d / "deictics.txt"), "conc": {}, "conn": []}
    for line in (d / "concreteness.tsv").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            w, v = line.split("\t")
            res["conc"][w.strip().lower()] = float(v)
    for line in (d / "connectives.tsv").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            p, c, pol = [x.strip() for x in line.split("\t")]
            res["conn"].append((p.lower().split(), c.lower(), pol.lower()))
    return res


def syllables(w):
    n, prev = 0, False
    for ch in w.lower():
        v = ch in VOWELS
        if v and not prev:
            n += 1
        prev = v
    return n


def lemma_or_form(t):
    return t["form"].lower() if t["lemma"] in ("", "_") else t["lemma"].lower()


def base(rel):
    return rel.split(":")[0]


def lexical(sents, res):
    f = {}
    alpha = [t for s in sents for t in s["tokens"] if alphabetic(t)]
    n = len(alpha)
    ns = len(sents)
    forms = [t["form"].lower() for t in alpha]
    counts = {}
    for w in forms:
        counts[w] = counts.get(w, 0) + 1
    f["hapax_ratio"] = sum(1 for c in counts.values() if c == 1) / n

    pars = {}
    for s in sents:
        pars.setdefault(s["par"], []).extend(t["form"].lower() for t in s["tokens"] if alphabetic(t))
    vals = []
    for ws in pars.values():
        if ws:
            T = len(set(ws))
            S = sum(1 for w in ws if syllables(w) >= 3)
            vals.append(T * (1 + S / len(ws)))
    f["d_textual_value"] = sum(vals) / len(vals)

    content = [set(lemma_or_form(t) for t in s["tokens"] if t["upos"] in ("NOUN", "VERB", "ADJ", "ADV"))
               for s in sents]
    for k in (2, 3):
        ratios = []
        for i in range(0, ns - k + 1):
            head = content[i]
            if not head:
                continue
            later = set().union(*content[i + 1:i + k])
            ratios.append(len(head & later) / len(head))
        f[f"lexical_overlap_{k}"] = sum(ratios) / len(ratios) if ratios else None

    def in_tier(t, tier):
        return t["form"].lower() in tier or (t["lemma"] not in ("", "_") and t["lemma"].lower() in tier)

    f["lr1"] = sum(in_tier(t, res["gsl1"]) for t in alpha) / n
    f["lr2"] = sum(in_tier(t, res["gsl2"]) for t in alpha) / n
    f["lr3"] = sum(in_tier(t, res["awl"]) for t in alpha) / n
    cv = []
    for t in alpha:
        v = res["conc"].get(t["form"].lower())
        if v is None and t["lemma"] not in ("", "_"):
            v = res["conc"].get(t["lemma"].lower())
        if v is not None:
            cv.append(v)
    f["concreteness"] = sum(cv) / len(cv) if cv else None

    toks = [t for s in sents for t in s["tokens"]]
    nouns = sum(t["upos"] in ("NOUN", "PROPN") for t in toks)
    prons = [t for t in toks if t["upos"] == "PRON"]
    arts = [t for t in toks if t["upos"] == "DET" and ("Definite" in t["feats"] or t["lemma"].lower() in ("a", "an", "the"))]
    f["noun_pronoun_ratio"] = nouns / max(len(prons), 1)
    f["deictic_article_ratio"] = sum(t["form"].lower() in res["deic"] for t in toks) / max(len(arts), 1)
    f["definite_article_freq"] = sum(t["upos"] == "DET" and (t["feats"].get("Definite") == "Def" or t["lemma"].lower() == "the")
                                     for t in toks) / ns
    f["attributive_adj_freq"] = sum(t["upos"] == "ADJ" and t["deprel"] == "amod" for t in toks) / ns
    f["emphatic_particle_freq"] = sum(t["form"].lower() in res["emph"] for t in toks) / ns
    f["demonstrative_freq"] = sum(t["feats"].get("PronType") == "Dem" for t in toks) / ns
    f["first_person_ratio"] = sum(t["feats"].get("Person") == "1" for t in prons) / max(len(prons), 1)

    tally = {}
    for s in sents:
        ws = [t["form"].lower() for t in s["tokens"] if t["upos"] not in ("PUNCT", "SYM")]
        i = 0
        while i < len(ws):
            best = None
            for p, c, pol in res["conn"]:
                if ws[i:i + len(p)] == p and (best is None or len(p) > len(best[0])):
                    best = (p, c, pol)
            if best:
                tally[(best[1], best[2])] = tally.get((best[1], best[2]), 0) + 1
                i += len(best[0])
            else:
                i += 1
    for c in ("additive", "causal", "temporal", "logical"):
        for pol in ("pos", "neg"):
            f[f"conn_{c}_{pol}"] = tally.get((c, pol), 0) / ns
    return f


def tense_of(s, head, auxes):
    tok = {t["id"]: t for t in s["tokens"]}
    h = tok[head]
    ing = h["feats"].get("VerbForm") == "Ger" or (h["feats"].get("VerbForm") == "Part" and h["feats"].get("Tense") == "Pres")
    pastpart = h["feats"].get("VerbForm") == "Part" and h["feats"].get("Tense") != "Pres"
    if any(tok[a]["lemma"].lower() in ("will", "shall") for a in auxes):
        return "Future"
    for a in auxes:
        at = tok[a]
        lem, tense = at["lemma"].lower(), at["feats"].get("Tense")
        if ing and lem == "be" and tense == "Pres":
            return "Progressive"
        if pastpart and lem == "have" and tense in ("Pres", "Past"):
            return "Past"
        if ing and lem == "be" and tense == "Past":
            return "Past"
    if auxes:
        return "Other"
    vf, tn = h["feats"].get("VerbForm"), h["feats"].get("Tense")
    if vf == "Part":
        return "Participle"
    if vf == "Inf":
        return "Inf"
    if vf == "Ger":
        return "Other"
    return {"Pres": "Present", "Past": "Past"}.get(tn, "Other")


def groups_of(s):
    heads = [t for t in s["tokens"] if t["upos"] == "VERB" or (t["upos"] == "AUX" and base(t["deprel"]) not in ("aux", "cop"))]
    ids = {t["id"] for t in heads}
    out = []
    for h in heads:
        aux = [t["id"] for t in s["tokens"] if t["head"] == h["id"] and base(t["deprel"]) == "aux" and t["id"] not in ids]
        out.append({"head": h["id"], "tense": tense_of(s, h["id"], aux), "root": h["head"] == 0})
    return out


CLAUSAL = {"ccomp", "xcomp", "advcl", "acl", "acl:relcl", "csubj", "parataxis", "conj"}


def schema(s):
    gs = groups_of(s)
    by_head = {g["head"]: g for g in gs}
    roots = [g for g in gs if g["root"]]
    if not roots:
        return None
    tok = {t["id"]: t for t in s["tokens"]}
    kids = {g["head"]: [] for g in gs}
    for g in gs:
        if g["root"]:
            continue
        cur, clausal = tok[g["head"]], False
        while True:
            clausal = clausal or cur["deprel"] in CLAUSAL or base(cur["deprel"]) in CLAUSAL
            if cur["head"] == 0:
                break
            if cur["head"] in by_head:
                if clausal:
                    kids[cur["head"]].append(g["head"])
                break
            cur = tok[cur["head"]]

    def render(h, top):
        name = by_head[h]["tense"]
        txt = f"*{name}*" if top else name
        if kids[h]:
            txt += "(" + ",".join(render(k, False) for k in kids[h]) + ")"
        return txt

    text = render(roots[0]["head"], True)
    depth = level = 0
    for ch in text:
        if ch == "(":
            level += 1
            depth = max(depth, level)
        elif ch == ")":
            level -= 1
    return text, depth


def syntactic(sents):
    f = {}
    ns = len(sents)
    toks = [t for s in sents for t in s["tokens"]]
    f["relative_ratio"] = sum(t["deprel"] == "acl:relcl" for t in toks) / ns
    f["subordinate_ratio"] = sum(t["deprel"] in ("advcl", "ccomp", "xcomp", "acl", "acl:relcl") or
                                 base(t["deprel"]) in ("advcl", "ccomp", "xcomp", "acl") for t in toks) / ns
    f["modifier_per_noun"] = sum(base(t["deprel"]) in ("amod", "nmod", "nummod") for t in toks) / max(
        sum(t["upos"] in ("NOUN", "PROPN") for t in toks), 1)
    dens = []
    for s in sents:
        a = sum(alphabetic(t) for t in s["tokens"])
        if a:
            dens.append(100 * sum(t["upos"] == "VERB" for t in s["tokens"]) / a)
    f["verb_density"] = sum(dens) / len(dens) if dens else None

    allg = [g for s in sents for g in groups_of(s)]
    for key, name in (("present_ratio", "Present"), ("past_ratio", "Past"), ("participle_ratio", "Participle")):
        f[key] = sum(g["tense"] == name for g in allg) / len(allg) if allg else None

    depths = []
    for s in sents:
        tok = {t["id"]: t for t in s["tokens"]}
        best = 0
        for t in s["tokens"]:
            d, cur = 0, t
            while cur["head"] != 0:
                d += 1
                cur = tok[cur["head"]]
            best = max(best, d)
        depths.append(best)
    f["avg_graph_depth"] = sum(depths) / ns

    a = b = 0
    for s in sents:
        for g in groups_of(s):
            if g["root"]:
                a += g["tense"] in ("Present", "Future", "Progressive")
                b += g["tense"] == "Past"
    f["temporal_stability"] = max(a, b) / (a + b) if a + b else None

    hs = [schema(s) for s in sents]
    hs = [h for h in hs if h]
    f["hypotactic_depth"] = sum(d for _, d in hs) / len(hs) if hs else None
    return f


def semantic(sents, emb_path, fig_path, doc_id):
    f = {"avg_semantic_overlap": None, "tfi_per_sent": None, "tfi_per_1000": None}
    ntok = sum(alphabetic(t) for s in sents for t in s["tokens"])
    if emb_path:
        vecs = {}
        for line in Path(emb_path).read_text().splitlines():
            r = json.loads(line)
            if r["doc_id"] == doc_id:
                vecs[r["sent_index"]] = r["embedding"]
        if len(sents) >= 2:
            cs = []
            for i in range(len(sents) - 1):
                u, v = vecs[i], vecs[i + 1]
                dot = sum(x * y for x, y in zip(u, v))
                cs.append(dot / (math.sqrt(sum(x * x for x in u)) * math.sqrt(sum(y * y for y in v))))
            f["avg_semantic_overlap"] = sum(cs) / len(cs)
    if fig_path:
        F = 0
        for line in Path(fig_path).read_text().splitlines():
            r = json.loads(line)
            if r["doc_id"] != doc_id:
                continue
            if r["neutral_cosine"] is None:
                flag = r["figurative"]
            else:
                flag = r["topk_mean_similarity"] < 0.40 and r["neutral_cosine"] < 0.30
            F += bool(flag)
        f["tfi_per_sent"] = F / len(sents)
        f["tfi_per_1000"] = 1000 * F / ntok
    return f


def main():
    manifest, resdir = Path(sys.argv[1]), Path(sys.argv[2])
    res = load_resources(resdir)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["doc_id", "feature", "value"])
    with open(manifest) as fh:
        for row in csv.DictReader(fh):
            base_dir = manifest.parent
            sents = read_conllu(base_dir / row["path"])
            feats = {}
            feats.update(lexical(sents, res))
            feats.update(syntactic(sents))
            emb = base_dir / row["embeddings"] if row["embeddings"] else None
            fig = base_dir / row["figurative"] if row["figurative"] else None
            feats.update(semantic(sents, emb, fig, row["doc_id"]))
            for k in sorted(feats):
                v = feats[k]
                w.writerow([row["doc_id"], k, "" if v is None else repr(float(v))])


if __name__ == "__main__":
    main()
