#!/usr/bin/env python3
"""Independent counting oracle for the bundled mini corpus.

Recomputes the expected run ledger and frequency table for
tests/fixtures/mini from first principles (its own VTT parsing, masking,
tokenization, TF-IDF dedup and counting), and either writes the golden
files or verifies existing ones.

Usage:
    golden_counts.py write  <fixture_dir> <golden_dir>
    golden_counts.py verify <fixture_dir> <golden_dir>
"""

import math
import re
import sys
import unicodedata
from collections import Counter, defaultdict
from pathlib import Path

# Files whose rejection depends on language identification are known by
# construction; everything else is derived from the files themselves.
OFF_LANGUAGE = {"vid08"}

SENTINELS = ("⟦CENSORED⟧", "⟦SOUND⟧", "⟦EMAIL⟧", "⟦URL⟧", "⟦HANDLE⟧", "⟦NUM⟧")

TIMING_RE = re.compile(
    r"^(?:(\d+):)?(\d{2}):(\d{2})\.(\d{3})[ \t]+-->[ \t]+(?:(\d+):)?(\d{2}):(\d{2})\.(\d{3})(?:[ \t].*)?$"
)

ENTITIES = {"&amp;": "&", "&lt;": "<", "&gt;": ">", "&nbsp;": " ",
            "&lrm;": "", "&rlm;": ""}


def parse_timestamp(h, m, s, ms):
    hours = int(h) if h else 0
    return ((hours * 60 + int(m)) * 60 + int(s)) * 1000 + int(ms)


def strip_markup(text):
    text = re.sub(r"<[^>]*>", "", text)
    for ent, rep in ENTITIES.items():
        text = text.replace(ent, rep)
    return text.strip()


def parse_vtt(raw):
    """Returns list of (start_ms, end_ms, [lines]) or None if unparseable."""
    if raw.startswith("﻿"):
        raw = raw[1:]
    if not re.match(r"^WEBVTT(?:[ \t\r\n]|$)", raw):
        return None
    lines = raw.split("\n")
    blocks, cur = [], []
    for ln in lines[1:]:
        ln = ln.rstrip("\r")
        if ln.strip() == "":
            if cur:
                blocks.append(cur)
                cur = []
        else:
            cur.append(ln)
    if cur:
        blocks.append(cur)

    cues = []
    for block in blocks:
        head = block[0]
        if head.startswith(("NOTE", "STYLE", "REGION")):
            continue
        idx = 0
        if "-->" not in block[0]:
            idx = 1
            if idx >= len(block) or "-->" not in block[idx]:
                continue  # header metadata or junk block
        m = TIMING_RE.match(block[idx])
        if not m:
            continue  # malformed timing: cue skipped
        start = parse_timestamp(m.group(1), m.group(2), m.group(3), m.group(4))
        end = parse_timestamp(m.group(5), m.group(6), m.group(7), m.group(8))
        if end < start:
            continue
        payload = [strip_markup(t) for t in block[idx + 1:]]
        payload = [t for t in payload if t]
        cues.append((start, end, payload))
    cues.sort(key=lambda c: (c[0], c[1]))
    return cues


def collapse_scrolling(cues, window=1):
    out = []
    history = []  # line sets of the previous `window` cues
    for _, _, lines in cues:
        recent = set().union(*history) if history else set()
        for ln in lines:
            if ln not in recent:
                out.append(ln)
        history.append(set(lines))
        history = history[-window:]
    return out


def mark_special_regions(line):
    out = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch == "[":
            j = line.find("]", i + 1)
            if j == -1:
                out.append(line[i:])
                break
            inner = line[i + 1:j]
            if inner.strip() and set(inner) <= set("_ ") and "_" in inner:
                out.append("⟦CENSORED⟧")
            else:
                out.append("⟦SOUND⟧")
            i = j + 1
        elif ch == "【":
            j = line.find("】", i + 1)
            if j == -1:
                out.append(line[i:])
                break
            out.append("⟦SOUND⟧")
            i = j + 1
        else:
            out.append(ch)
            i += 1
    return "".join(out).strip()


def has_valid_chars(line):
    if any(s in line for s in SENTINELS):
        return True
    return any("LATIN" in unicodedata.name(c, "") for c in line if c.isalpha())


# --- PII masking on raw lines (email > url-with-protocol > url > handle) ---

EMAIL_RE = re.compile(r"[A-Za-z0-9._%+\-]+@[A-Za-z0-9\-]+(?:\.[A-Za-z0-9\-]+)*\.[A-Za-z]{2,}")
PROTO_URL_RE = re.compile(r"https?://[^\s]+")
BARE_URL_RE = re.compile(r"(?:[A-Za-z0-9\-]+\.)+[A-Za-z]{2,}(?:/[^\s]*|\?[^\s]+)")
HANDLE_RE = re.compile(r"@[A-Za-z0-9_]+")


def _boundary_ok(text, start):
    if start == 0:
        return True
    prev = text[start - 1]
    return not (prev.isalnum() or prev in "_@.")


def mask_line(line):
    line = EMAIL_RE.sub("⟦EMAIL⟧", line)
    line = PROTO_URL_RE.sub("⟦URL⟧", line)

    def sub_boundary(rx, repl, s):
        out, pos = [], 0
        for m in rx.finditer(s):
            if _boundary_ok(s, m.start()):
                out.append(s[pos:m.start()])
                out.append(repl)
                pos = m.end()
        out.append(s[pos:])
        return "".join(out)

    line = sub_boundary(BARE_URL_RE, "⟦URL⟧", line)
    line = sub_boundary(HANDLE_RE, "⟦HANDLE⟧", line)
    return line


TOKEN_RE = re.compile(
    "|".join(re.escape(s) for s in SENTINELS) + r"|[^\W\d]+|\d+"
)


def tokenize(line):
    """Sentinels atomic, word-class runs, digit runs; then normalize+mask."""
    toks = []
    for m in TOKEN_RE.finditer(mask_line(line)):
        t = m.group(0)
        if t in SENTINELS:
            toks.append(t)
            continue
        t = unicodedata.normalize("NFKC", t).lower()
        if re.fullmatch(r"\d+", t):
            toks.append("⟦NUM⟧")
        else:
            toks.append(t)
    return toks


def tfidf_vectors(doc_tokens):
    n_docs = len(doc_tokens)
    df = Counter()
    for toks in doc_tokens.values():
        for term in set(toks):
            df[term] += 1
    vecs = {}
    for vid, toks in doc_tokens.items():
        tf = Counter(toks)
        vec = {t: c * (math.log((1 + n_docs) / (1 + df[t])) + 1) for t, c in tf.items()}
        norm = math.sqrt(sum(w * w for w in vec.values()))
        vecs[vid] = {t: w / norm for t, w in vec.items()}
    return vecs


def cosine(a, b):
    if len(b) < len(a):
        a, b = b, a
    return sum(w * b[t] for t, w in a.items() if t in b)


def greedy_eliminate(edges, token_counts):
    adj = defaultdict(set)
    for a, b, _ in edges:
        adj[a].add(b)
        adj[b].add(a)
    removed = []
    while True:
        live = [(v, ns) for v, ns in adj.items() if ns]
        if not live:
            break
        live.sort(key=lambda x: (-len(x[1]), token_counts[x[0]], x[0]))
        victim = live[0][0]
        removed.append(victim)
        for other in list(adj[victim]):
            adj[other].discard(victim)
        adj[victim] = set()
    return removed


def main():
    mode, fixture_dir, golden_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    manifest_path = fixture_dir / "manifest.tsv"
    records = []
    for raw in manifest_path.read_text(encoding="utf-8").splitlines():
        if not raw.strip() or raw.startswith("#"):
            continue
        vid, channel, category, dur, lang, sub = raw.split("\t")
        records.append((vid, channel, category, sub))

    ingested = len(records)
    parsed_docs = {}
    rejected = Counter()
    meta = {}

    for vid, channel, category, sub in records:
        meta[vid] = (channel, category)
        raw = (fixture_dir / sub).read_text(encoding="utf-8")
        cues = parse_vtt(raw)
        if cues is None:
            rejected["unparseable"] += 1
            continue
        lines = [mark_special_regions(ln) for ln in collapse_scrolling(cues)]
        parsed_docs[vid] = [ln for ln in lines if ln]

    cleaned_docs = {}
    for vid, lines in parsed_docs.items():
        if vid in OFF_LANGUAGE:
            rejected["below-threshold"] += 1
            continue
        kept = [ln for ln in lines if has_valid_chars(ln)]
        if len(kept) < 3:
            rejected["too-short"] += 1
            continue
        cleaned_docs[vid] = kept

    doc_tokens = {vid: [t for ln in lines for t in tokenize(ln)]
                  for vid, lines in cleaned_docs.items()}
    token_counts = {vid: len(toks) for vid, toks in doc_tokens.items()}

    vecs = tfidf_vectors(doc_tokens)
    vids = sorted(vecs)
    edges = []
    for i, a in enumerate(vids):
        for b in vids[i + 1:]:
            c = cosine(vecs[a], vecs[b])
            if c >= 0.95:
                edges.append((a, b, c))
    print("duplicate edges:", [(a, b, round(c, 4)) for a, b, c in edges],
          file=sys.stderr)
    removed = greedy_eliminate(edges, token_counts)
    print("removed:", removed, file=sys.stderr)

    survivors = [v for v in vids if v not in removed]

    word_count = Counter()
    word_videos = Counter()
    word_channels = defaultdict(set)
    word_category = defaultdict(Counter)
    for vid in survivors:
        channel, category = meta[vid]
        counts = Counter(doc_tokens[vid])
        for w, c in counts.items():
            word_count[w] += c
            word_videos[w] += 1
            word_channels[w].add(channel)
            word_category[w][category] += c

    n_tokens = sum(word_count.values())
    n_types = len(word_count)
    categories = sorted({meta[v][1] for v, _, _, _ in records}.union())

    ledger_rows = [
        ("ingested", ingested),
        ("parsed", len(parsed_docs)),
        ("rejected_unparseable", rejected["unparseable"]),
        ("rejected_below_threshold", rejected["below-threshold"]),
        ("rejected_too_short", rejected["too-short"]),
        ("cleaned", len(cleaned_docs)),
        ("duplicates_removed", len(removed)),
        ("unique", len(survivors)),
        ("tokens", n_tokens),
        ("types", n_types),
        ("seed", 42),
    ]
    ledger = "key\tvalue\n" + "".join(f"{k}\t{v}\n" for k, v in ledger_rows)

    header = f"#tokens={n_tokens}\t#types={n_types}\n"
    cols = "word\tcount\tvideos\tchannels\tspecial" + \
        "".join(f"\tcount:{c}" for c in categories) + "\n"
    rows = []
    for w in sorted(word_count, key=lambda w: (-word_count[w], w.encode("utf-8"))):
        special = 1 if w in SENTINELS else 0
        cat_cells = "".join(f"\t{word_category[w][c]}" for c in categories)
        rows.append(f"{w}\t{word_count[w]}\t{word_videos[w]}\t"
                    f"{len(word_channels[w])}\t{special}{cat_cells}\n")
    freq = header + cols + "".join(rows)

    if mode == "write":
        golden_dir.mkdir(parents=True, exist_ok=True)
        (golden_dir / "ledger.tsv").write_text(ledger, encoding="utf-8")
        (golden_dir / "freq.tsv").write_text(freq, encoding="utf-8")
        print(f"wrote goldens to {golden_dir}", file=sys.stderr)
    else:
        ok = True
        for name, text in (("ledger.tsv", ledger), ("freq.tsv", freq)):
            want = (golden_dir / name).read_text(encoding="utf-8")
            if want != text:
                print(f"MISMATCH: {name}", file=sys.stderr)
                ok = False
        if not ok:
            sys.exit(1)
        print("goldens verified", file=sys.stderr)


if __name__ == "__main__":
    main()
