"""Seeded toy corpus generator: countries, currencies, capitals, borders.

Questions come from fixed paraphrase templates per topic so the corpus
is topically clustered the way real question logs are; each question's
gold answer is read off the generated graph, so the template inventory
recovers every answer and the corpus oracle F1 is 1.0.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

TRIPLES_FILE = "triples.tsv"
CATALOG_FILE = "catalog.tsv"
DATASET_FILE = "dataset.jsonl"

QUESTIONS_PER_TEMPLATE = 14

# (country id, country name, currency id, currency name, capital id, capital name)
_COUNTRIES = [
    ("argentina", "Argentina", "argentine_peso", "Argentine peso", "buenos_aires", "Buenos Aires"),
    ("austria", "Austria", "euro", "Euro", "vienna", "Vienna"),
    ("brazil", "Brazil", "brazilian_real", "Brazilian real", "brasilia", "Brasilia"),
    ("canada", "Canada", "canadian_dollar", "Canadian dollar", "ottawa", "Ottawa"),
    ("chile", "Chile", "chilean_peso", "Chilean peso", "santiago", "Santiago"),
    ("china", "China", "renminbi", "Renminbi", "beijing", "Beijing"),
    ("cuba", "Cuba", "cuban_peso", "Cuban peso", "havana", "Havana"),
    ("dominican_republic", "Dominican Republic", "dominican_peso", "Dominican peso", "santo_domingo", "Santo Domingo"),
    ("egypt", "Egypt", "egyptian_pound", "Egyptian pound", "cairo", "Cairo"),
    ("france", "France", "euro", "Euro", "paris", "Paris"),
    ("germany", "Germany", "euro", "Euro", "berlin", "Berlin"),
    ("greece", "Greece", "euro", "Euro", "athens", "Athens"),
    ("india", "India", "indian_rupee", "Indian rupee", "new_delhi", "New Delhi"),
    ("japan", "Japan", "japanese_yen", "Japanese yen", "tokyo", "Tokyo"),
    ("kenya", "Kenya", "kenyan_shilling", "Kenyan shilling", "nairobi", "Nairobi"),
    ("mexico", "Mexico", "mexican_peso", "Mexican peso", "mexico_city", "Mexico City"),
    ("norway", "Norway", "norwegian_krone", "Norwegian krone", "oslo", "Oslo"),
    ("peru", "Peru", "peruvian_sol", "Peruvian sol", "lima", "Lima"),
    ("poland", "Poland", "polish_zloty", "Polish zloty", "warsaw", "Warsaw"),
    ("sweden", "Sweden", "swedish_krona", "Swedish krona", "stockholm", "Stockholm"),
    ("thailand", "Thailand", "thai_baht", "Thai baht", "bangkok", "Bangkok"),
    ("turkey", "Turkey", "turkish_lira", "Turkish lira", "ankara", "Ankara"),
    ("united_kingdom", "United Kingdom", "pound_sterling", "Pound sterling", "london", "London"),
    ("vietnam", "Vietnam", "vietnamese_dong", "Vietnamese dong", "hanoi", "Hanoi"),
]

_EXTRA_ALIASES = {
    "united_kingdom": ["uk", "great britain"],
    "dominican_republic": ["the dominican republic"],
}

# relation -> question templates; {x} is the country name.  Each
# template's wording is kept distinctive so the lexical bridge to the
# relation phrase has to be learned per template.
_TEMPLATES = {
    "currency": [
        "what currency does {x} use?",
        "what is the currency of {x}?",
        "what money do they use in {x}?",
        "name the legal tender of {x}?",
        "which cash is used in {x}?",
    ],
    "capital": [
        "what is the capital of {x}?",
        "what is the capital city of {x}?",
        "which city is the seat of government in {x}?",
        "name the chief city of {x}?",
        "where is the government of {x} based?",
    ],
    "adjoins": [
        "what countries border {x}?",
        "which nations are neighbours of {x}?",
        "what lands share a frontier with {x}?",
        "who are the neighbors of {x}?",
        "which states touch {x}?",
    ],
}


def _neighbors(i: int) -> tuple[int, int]:
    n = len(_COUNTRIES)
    return ((i - 1) % n, (i + 1) % n)


def build_catalog_lines() -> list[str]:
    lines = ["# tensorparse toy catalog"]
    seen_entities = set()

    def entity_line(eid, name, aliases=()):
        if eid in seen_entities:
            return
        seen_entities.add(eid)
        lines.append(f"E\t{eid}\t{name}\t{'|'.join(aliases)}")

    for cid, cname, curid, curname, capid, capname in _COUNTRIES:
        entity_line(cid, cname, _EXTRA_ALIASES.get(cid, ()))
    for cid, cname, curid, curname, capid, capname in _COUNTRIES:
        entity_line(curid, curname)
    for cid, cname, curid, curname, capid, capname in _COUNTRIES:
        entity_line(capid, capname)
    lines.append("R\tcurrency\tcurrency\tcountry\tcurrency")
    lines.append("R\tcapital\tcapital\tcountry\tcity")
    lines.append("R\tadjoins\tadjoins\tcountry\tcountry")
    return lines


def build_triple_lines() -> list[str]:
    lines = ["# tensorparse toy triples"]
    for i, (cid, _, curid, _, capid, _) in enumerate(_COUNTRIES):
        lines.append(f"{cid}\tcurrency\t{curid}")
        lines.append(f"{cid}\tcapital\t{capid}")
        for j in _neighbors(i):
            lines.append(f"{cid}\tadjoins\t{_COUNTRIES[j][0]}")
    return lines


def _gold_answers(relation: str, country_index: int) -> list[str]:
    row = _COUNTRIES[country_index]
    if relation == "currency":
        return [row[3]]
    if relation == "capital":
        return [row[5]]
    return sorted(_COUNTRIES[j][1] for j in _neighbors(country_index))


def build_examples(seed: int) -> list[dict]:
    rng = random.Random(seed)
    examples = []
    for relation in sorted(_TEMPLATES):
        for template in _TEMPLATES[relation]:
            for i in rng.sample(range(len(_COUNTRIES)), QUESTIONS_PER_TEMPLATE):
                examples.append(
                    {
                        "question": template.format(x=_COUNTRIES[i][1].lower()),
                        "answers": _gold_answers(relation, i),
                    }
                )
    rng.shuffle(examples)
    return examples


def gen_toy(out_dir, seed: int = 0) -> dict:
    """Write triples.tsv, catalog.tsv, and dataset.jsonl under out_dir.

    Byte-identical output for a fixed seed.  Returns the written paths.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "triples": out / TRIPLES_FILE,
        "catalog": out / CATALOG_FILE,
        "dataset": out / DATASET_FILE,
    }
    paths["catalog"].write_text("\n".join(build_catalog_lines()) + "\n", encoding="utf-8")
    paths["triples"].write_text("\n".join(build_triple_lines()) + "\n", encoding="utf-8")
    with open(paths["dataset"], "w", encoding="utf-8") as fh:
        for example in build_examples(seed):
            fh.write(json.dumps(example, sort_keys=True) + "\n")
    return paths
