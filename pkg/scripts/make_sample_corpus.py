"""Generate the bundled synthetic sample corpus (src/tweetsent/data/sample_tweets.csv).

The tweets are template-generated, not real: 300 distinct texts plus a few
exact duplicates and blank rows so the cleaning step has work to do.

Usage::

    python scripts/make_sample_corpus.py src/tweetsent/data/sample_tweets.csv
"""
import csv
import random
import sys

SUBJECTS = ["Israel", "Gaza", "Jerusalem", "the government", "the UN", "Palestinians",
            "Israelis", "the negotiators", "the Knesset", "local families", "Egypt", "the envoy"]
PLACES = ["Gaza", "Jerusalem", "Tel Aviv", "Sheikh Jarrah", "the West Bank", "Ashkelon", "Rafah"]
POSITIVE = ["peaceful", "brave", "great", "good", "happy", "proud", "safe", "beautiful",
            "wonderful", "fair", "kind", "strong", "amazing", "important"]
NEGATIVE = ["violent", "terrible", "sad", "horrible", "wrong", "cruel", "dangerous", "unfair",
            "illegal", "tragic", "brutal", "evil", "angry", "bloody", "disgusting", "worst"]
NOUNS = ["statement", "meeting", "vote", "talks", "briefing", "delegation", "schedule",
         "announcement", "session", "timeline", "visit", "summary"]
VERBS = ["announced", "scheduled", "discussed", "published", "postponed", "confirmed", "reviewed"]
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
TAGS = ["#Israel", "#Gaza", "#Palestine", "#Ceasefire", "#Peace", "#Jerusalem", "#IsraelUnderFire"]

POS_TEMPLATES = [
    "So {pos} to see {subject} working towards peace today {tag}",
    "{subject} took a {pos} step in {place} https://t.co/{code}",
    "@{user} this is {pos} news for {subject}!!",
    "Feeling {pos} about the ceasefire in {place} {tag}",
    "A {pos} and {pos2} day for {place}. Thank you {subject}",
    "Really {pos} {noun} from {subject} on {day} {tag}",
]
NEG_TEMPLATES = [
    "{neg} scenes in {place} tonight {tag}",
    "This is {neg}. {subject} must stop the violence @{user}",
    "Not {pos} at all: {neg} attacks on {place} https://t.co/{code}",
    "Another {neg} night in {place}... {tag} {tag2}",
    "{subject} made a {neg} and {neg2} decision on {day}",
    "Never {pos}, always {neg}: the {noun} from {subject} {tag}",
]
NEU_TEMPLATES = [
    "{subject} {verb} the {noun} on {day}",
    "Live {noun}: {subject} {verb} in {place} https://t.co/{code}",
    "RT @{user}: {subject} {noun} {day} {tag}",
    "{place} {noun} {verb} by {subject} www.example.org/{code}",
    "Update {num}: {subject} {verb} the {noun} {tag}",
]


def fill(rng, template):
    pos = rng.sample(POSITIVE, 2)
    neg = rng.sample(NEGATIVE, 2)
    tags = rng.sample(TAGS, 2)
    text = template.format(
        subject=rng.choice(SUBJECTS), place=rng.choice(PLACES), pos=pos[0], pos2=pos[1],
        neg=neg[0], neg2=neg[1], noun=rng.choice(NOUNS), verb=rng.choice(VERBS),
        day=rng.choice(DAYS), tag=tags[0], tag2=tags[1], num=rng.randint(1, 99),
        user=f"user{rng.randint(1, 500)}", code="".join(rng.choices("abcdefghjkmnpqrstuvwxyz0123456789", k=8)),
    )
    return text[0].upper() + text[1:] if text[0].islower() else text


def main(path, n_unique=300, seed=2021):
    rng = random.Random(seed)
    texts, seen = [], set()
    groups = [POS_TEMPLATES, NEG_TEMPLATES, NEU_TEMPLATES]
    while len(texts) < n_unique:
        text = fill(rng, rng.choice(rng.choice(groups)))
        if text not in seen:
            seen.add(text)
            texts.append(text)
    rows = list(texts)
    for _ in range(12):
        rows.insert(rng.randrange(len(rows)), rng.choice(texts))
    for _ in range(8):
        rows.insert(rng.randrange(len(rows)), rng.choice(["", "   "]))

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["tweet_id", "created_at", "user", "text"])
        for i, text in enumerate(rows):
            day = 10 + i * 12 // len(rows)
            writer.writerow([1390000000000000000 + i * 7919, f"2021-05-{day:02d}",
                             f"user{rng.randint(1, 500)}", text])
    print(f"wrote {len(rows)} rows ({n_unique} distinct) to {path}")


if __name__ == "__main__":
    main(sys.argv[1])
