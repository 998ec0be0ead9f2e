#!/usr/bin/env python3
# Copyright 2026 The Proofread Forge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the vocabulary, calibration sample and test corpus.

Requires the `wordfreq` package. Output is deterministic for a given
wordfreq release.
"""

import argparse
import pathlib
import random
import re

import wordfreq

WORD_RE = re.compile(r"[a-z]+('[a-z]+)?")

SUBJECTS = ["i", "we", "you", "they"]
THIRD = ["he", "she", "my sister", "my brother", "the team", "my friend",
         "our manager", "the teacher", "my mom", "my dad"]
VERBS_BASE = ["send", "check", "finish", "read", "call", "bring", "fix",
              "share", "review", "book", "cancel", "change", "find", "buy",
              "clean", "update", "print", "sign", "move", "open"]
VERBS_PAST = {"send": "sent", "check": "checked", "finish": "finished",
              "read": "read", "call": "called", "bring": "brought",
              "fix": "fixed", "share": "shared", "review": "reviewed",
              "book": "booked", "cancel": "cancelled", "change": "changed",
              "find": "found", "buy": "bought", "clean": "cleaned",
              "update": "updated", "print": "printed", "sign": "signed",
              "move": "moved", "open": "opened"}
OBJECTS = ["the report", "the tickets", "the car", "the kitchen",
           "the document", "the files", "your email", "the order",
           "the photos", "the contract", "the table", "dinner",
           "the meeting", "the schedule", "the package", "the bill",
           "the slides", "the room", "my phone", "the list", "the door",
           "the address", "the recipe", "the presentation"]
TIMES = ["today", "tomorrow", "tonight", "this morning", "this afternoon",
         "this weekend", "next week", "on monday", "on friday",
         "after lunch", "before noon", "later", "soon", "right now",
         "by the end of the day"]
PLACES = ["at home", "at the office", "at the station", "in the park",
          "at the store", "at school", "at the airport", "downtown",
          "at the hospital", "at the gym", "near the bridge",
          "at the library"]
GREETINGS = ["Hey", "Hi", "Hello", "Good morning", "Good evening",
             "Thanks", "Sorry", "Okay", "Sure", "Great"]
FEELINGS = ["happy", "tired", "busy", "excited", "worried", "ready",
            "late", "sick", "hungry", "sure", "glad", "free"]
ADJS = ["nice", "great", "good", "quick", "short", "long", "simple",
        "strange", "perfect", "amazing", "difficult", "important"]
NOUNS = ["idea", "day", "movie", "trip", "game", "party", "plan", "song",
         "book", "question", "story", "week", "place", "show"]
EXTRAS = ["https://example.com", "www.example.org/help", ":-)", ":)",
          "10:30", "7:45", "12/05/2024", "03/11/2023", ";-)", "9:15"]

TEMPLATES = [
    "Can you {v} {o} {t}?",
    "Could you please {v} {o} {t}?",
    "{S} will {v} {o} {t}.",
    "{S} need to {v} {o} {t}.",
    "{T} already {vp} {o}.",
    "{S} {vp} {o} {t}.",
    "{G}, are you {f} {t}?",
    "{G}! I am {f} {t}.",
    "Do you want to meet {p} {t}?",
    "Let me know when you {vp} {o}.",
    "I think it was a {a} {n}.",
    "That was a {a} {n}, thank you!",
    "{T} is {f} and will call you {t}.",
    "We should meet {p} {t}.",
    "I can't {v} {o} {t}, sorry.",
    "Don't forget to {v} {o} {t}.",
    "Have you seen {o} {p}?",
    "I'm {p} right now, can you {v} {o}?",
    "{G}, did you {v} {o} {t}?",
    "Please {v} {o} and send it to me {t}.",
    "It's a {a} {n}, you should see it.",
    "We are going to {v} {o} {t}.",
    "Where did you put {o}?",
    "I will be {p} {t}.",
    "Why didn't you {v} {o}?",
    "My {n} was {a}, how was yours?",
    "{T} said the {n} was {a}.",
    "Let's {v} {o} {t} {x}",
    "See you {p} at {clock} {emo}",
    "The {n} is on {date}, see {url}",
    "I'll {v} {o} {t} {emo}",
    "Thank you so much for the {a} {n} {emo}",
]


def capitalize(s):
    return s[:1].upper() + s[1:]


def make_sentence(rng):
    tpl = rng.choice(TEMPLATES)
    fill = {
        "v": rng.choice(VERBS_BASE),
        "vp": VERBS_PAST[rng.choice(VERBS_BASE)],
        "o": rng.choice(OBJECTS),
        "t": rng.choice(TIMES),
        "p": rng.choice(PLACES),
        "G": rng.choice(GREETINGS),
        "f": rng.choice(FEELINGS),
        "a": rng.choice(ADJS),
        "n": rng.choice(NOUNS),
        "S": capitalize(rng.choice(SUBJECTS)),
        "T": capitalize(rng.choice(THIRD)),
        "x": rng.choice(EXTRAS),
        "clock": rng.choice(["10:30", "7:45", "9:15", "6:00", "11:20"]),
        "date": rng.choice(["12/05/2024", "03/11/2023", "21/09/2025"]),
        "url": rng.choice(["https://example.com", "www.example.org/help"]),
        "emo": rng.choice([":-)", ":)", ";-)", ":D"]),
    }
    s = tpl.format(**fill)
    return capitalize(s)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--root", default=str(pathlib.Path(__file__).resolve().parents[1]))
    ap.add_argument("--vocab-size", type=int, default=10000)
    ap.add_argument("--sentences", type=int, default=1200)
    args = ap.parse_args()
    root = pathlib.Path(args.root)

    words = [w for w in wordfreq.top_n_list("en", 30000) if WORD_RE.fullmatch(w)]
    vocab = words[: args.vocab_size]
    rng = random.Random(20240611)

    sentences = []
    seen = set()
    while len(sentences) < args.sentences:
        s = make_sentence(rng)
        if s not in seen:
            seen.add(s)
            sentences.append(s)

    # Every corpus word must be in the dictionary so clean lines pass the
    # rule judge's spell check.
    needed = set()
    for s in sentences:
        for tok in s.split():
            core = tok.strip(".,!?").lower()
            if WORD_RE.fullmatch(core):
                needed.add(core)
    vocab_set = set(vocab)
    for w in sorted(needed - vocab_set):
        vocab.append(w)
        vocab_set.add(w)

    (root / "data").mkdir(exist_ok=True)
    with open(root / "data" / "english_10k.tsv", "w") as f:
        for w in vocab:
            count = max(1, round(wordfreq.word_frequency(w, "en") * 1e9))
            f.write(f"{w}\t{count}\n")

    tdir = root / "tests" / "data"
    tdir.mkdir(parents=True, exist_ok=True)
    with open(tdir / "clean_corpus.txt", "w") as f:
        for s in sentences:
            f.write(s + "\n")

    # Unigram sample weighted by corpus frequency for touch-model calibration.
    weights = [wordfreq.word_frequency(w, "en") for w in vocab[:5000]]
    out = []
    total = 0
    while total < 120000:
        line = " ".join(rng.choices(vocab[:5000], weights=weights, k=12))
        out.append(line)
        total += len(line) + 1
    with open(root / "data" / "english_sample.txt", "w") as f:
        f.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
