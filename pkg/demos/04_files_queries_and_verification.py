"""File formats, acceptance queries and differential self-checking.

Parses the same framework from TGF and APX text, answers the local
acceptance questions, and runs the matrix path against the brute-force
reference on a random framework.
"""

from afmat import (
    GeneratorConfig,
    Semantics,
    extensions,
    format_apx,
    generate,
    oracle_family,
    parse_apx,
    parse_tgf,
    query,
)

TGF = """\
wet_lawn
rain
sprinkler
#
rain sprinkler
sprinkler rain
"""

f, names = parse_tgf(TGF)
print("parsed TGF:", f)
print("name map:", names.names)

apx_text = format_apx(f, names)
print("\nthe same framework as APX:")
print(apx_text)
assert parse_apx(apx_text) == (f, names)

print("acceptance questions under preferred semantics:")
for name in names.names:
    i = names.id_of(name)
    print(
        f"  {name}: in some extension? {query(f, 'DC', 'pr', i)}"
        f" / in all? {query(f, 'DS', 'pr', i)}"
        f" / attacked by some? {query(f, 'AC', 'pr', i)}"
    )

print("\ndifferential check on a random framework (matrix path vs brute force):")
g = generate(GeneratorConfig(n=7, p=0.25, seed=8))
for tag in Semantics:
    main = extensions(g, tag).sets
    reference = oracle_family(g, tag).sets
    print(f"  {tag.value:3s} {len(main):3d} sets, matches reference: {main == reference}")
