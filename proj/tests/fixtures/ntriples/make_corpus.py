#!/usr/bin/env python3
"""Regenerates the N-Triples round-trip corpus in this directory.

Files are deterministic: rerunning overwrites them with identical bytes.
"""
import pathlib
import random

HERE = pathlib.Path(__file__).resolve().parent
SKOS = "http://www.w3.org/2004/02/skos/core#"
XL = "http://www.w3.org/2008/05/skos-xl#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD = "http://www.w3.org/2001/XMLSchema#"

HANDWRITTEN = {
    "escapes_echar": [
        '<http://example.org/s> <http://example.org/p> "tab\\there" .',
        '<http://example.org/s> <http://example.org/p> "quote \\" inside" .',
        '<http://example.org/s> <http://example.org/p> "back\\\\slash" .',
        '<http://example.org/s> <http://example.org/p> "line\\nbreak\\rreturn" .',
        '<http://example.org/s> <http://example.org/p> "bell\\b feed\\f apostrophe\\\'" .',
    ],
    "escapes_uchar": [
        '<http://example.org/s> <http://example.org/p> "caf\\u00E9" .',
        '<http://example.org/s> <http://example.org/p> "smile \\U0001F600" .',
        '<http://example.org/s> <http://example.org/p> "\\u0022quoted\\u0022" .',
        '<http://example.org/caf\\u00E9> <http://example.org/p> <http://example.org/o> .',
    ],
    "utf8_raw": [
        '<http://example.org/s> <http://example.org/p> "Ελληνικά"@el .',
        '<http://example.org/s> <http://example.org/p> "日本語"@ja .',
        '<http://example.org/s> <http://example.org/p> "mammifères"@fr .',
        '<http://example.org/ü> <http://example.org/p> "ü" .',
    ],
    "language_tags": [
        '<http://example.org/s> <http://example.org/p> "colour"@en-GB .',
        '<http://example.org/s> <http://example.org/p> "color"@en-US .',
        '<http://example.org/s> <http://example.org/p> "kleur"@nl .',
        '<http://example.org/s> <http://example.org/p> "x"@zh-Hant-TW .',
        '<http://example.org/s> <http://example.org/p> "x"@de-CH-1901 .',
    ],
    "language_tag_case": [
        '<http://example.org/s> <http://example.org/p> "same"@EN .',
        '<http://example.org/s> <http://example.org/p> "same"@en .',
        '<http://example.org/s> <http://example.org/p> "other"@En-gB .',
    ],
    "typed_literals": [
        f'<http://example.org/s> <http://example.org/p> "42"^^<{XSD}integer> .',
        f'<http://example.org/s> <http://example.org/p> "3.14"^^<{XSD}decimal> .',
        f'<http://example.org/s> <http://example.org/p> "true"^^<{XSD}boolean> .',
        f'<http://example.org/s> <http://example.org/p> "2024-01-01"^^<{XSD}date> .',
        f'<http://example.org/s> <http://example.org/p> "plain"^^<{XSD}string> .',
        '<http://example.org/s> <http://example.org/p> "M1495-2199"^^<http://example.org/LCC> .',
    ],
    "blank_nodes": [
        "_:a <http://example.org/p> _:b .",
        "_:b <http://example.org/p> _:a .",
        "_:node_1 <http://example.org/p> \"x\" .",
        "_:A9 <http://example.org/p> <http://example.org/o> .",
    ],
    "comments_and_blank_lines": [
        "# leading comment",
        "",
        "<http://example.org/s> <http://example.org/p> <http://example.org/o> . # trailing comment",
        "   ",
        "<http://example.org/s> <http://example.org/p> \"# not a comment\" .",
    ],
    "whitespace_variants": [
        "<http://example.org/s>\t<http://example.org/p>\t<http://example.org/o>\t.",
        "  <http://example.org/s>   <http://example.org/p> \"spaced\"   .  ",
        "<http://example.org/s> <http://example.org/p> <http://example.org/o2>.",
    ],
    "empty_literal": [
        '<http://example.org/s> <http://example.org/p> "" .',
        '<http://example.org/s> <http://example.org/p> ""@en .',
        f'<http://example.org/s> <http://example.org/p> ""^^<{XSD}string> .',
    ],
    "duplicates": [
        "<http://example.org/s> <http://example.org/p> <http://example.org/o> .",
        "<http://example.org/s> <http://example.org/p> <http://example.org/o> .",
        '<http://example.org/s> <http://example.org/p> "v"@en .',
        '<http://example.org/s> <http://example.org/p> "v"@en .',
    ],
    "iri_schemes": [
        "<urn:isbn:0451450523> <http://example.org/p> <mailto:someone@example.org> .",
        "<https://example.org/a?b=c&d=e#frag> <http://example.org/p> <tag:example.org,2024:x> .",
        "<file:///tmp/x> <http://example.org/p> <http://example.org/%20encoded> .",
    ],
    "skos_love": [
        f"<http://example.org/concept-1234> <{XL}prefLabel> <http://example.org/label-5678> .",
        '<http://example.org/label-5678> <%sliteralForm> "love" .' % XL,
    ],
    "skos_hierarchy": [
        f"<http://example.org/mammals> <{SKOS}broader> <http://example.org/animals> .",
        f"<http://example.org/animals> <{RDF}type> <{SKOS}Concept> .",
        f'<http://example.org/animals> <{SKOS}prefLabel> "animals"@en .',
        f'<http://example.org/animals> <{SKOS}prefLabel> "animaux"@fr .',
    ],
    "ordered_collection": [
        f"<http://example.org/oc> <{SKOS}memberList> _:l0 .",
        f"_:l0 <{RDF}first> <http://example.org/a> .",
        f"_:l0 <{RDF}rest> _:l1 .",
        f"_:l1 <{RDF}first> <http://example.org/b> .",
        f"_:l1 <{RDF}rest> <{RDF}nil> .",
    ],
    "crlf_line_endings": None,  # written below with \r\n
    "no_final_newline": None,
}

LITERAL_POOL = [
    '"plain"', '"tagged"@en', '"tagged"@fr-CA', '"5"^^<%sinteger>' % XSD, '"a\\"b"', '"a\\\\b"',
    '"multi\\nline"', '"caf\\u00E9"', '"emoji \\U0001F600"', '"tab\\t"', '"日本"@ja', '""',
]
PREDICATES = [SKOS + p for p in ("prefLabel", "altLabel", "hiddenLabel", "notation", "definition", "broader",
                                 "related", "exactMatch", "inScheme", "member")] + [RDF + "type", XL + "literalForm"]


def random_file(rng, n):
    lines = []
    for _ in range(n):
        s = rng.choice([f"<http://example.org/r{rng.randrange(12)}>", f"_:b{rng.randrange(6)}"])
        p = f"<{rng.choice(PREDICATES)}>"
        roll = rng.random()
        if roll < 0.45:
            o = rng.choice(LITERAL_POOL)
        elif roll < 0.75:
            o = f"<http://example.org/r{rng.randrange(12)}>"
        else:
            o = f"_:b{rng.randrange(6)}"
        lines.append(f"{s} {p} {o} .")
    return lines


def main():
    for old in HERE.glob("*.nt"):
        old.unlink()
    for name, lines in HANDWRITTEN.items():
        path = HERE / f"{name}.nt"
        if name == "crlf_line_endings":
            path.write_bytes(b"<http://example.org/s> <http://example.org/p> \"crlf\" .\r\n"
                             b"<http://example.org/s> <http://example.org/p> <http://example.org/o> .\r\n")
        elif name == "no_final_newline":
            path.write_bytes(b"<http://example.org/s> <http://example.org/p> \"last\" .")
        else:
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    rng = random.Random(20240501)
    for i in range(40):
        lines = random_file(rng, rng.randrange(1, 60))
        (HERE / f"random_{i:02d}.nt").write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
