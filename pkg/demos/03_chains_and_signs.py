"""The free graded operad on cell trees and its differential.

Each internal vertex with k children, b of them black corks, is a generator
of degree k + b - 2.  The differential squares to zero only for a good sign
convention; the search below checks every candidate in a small family.
"""
from uassoc import chain as ch
from uassoc import trees as tr

conv = ch.validated_convention()
print("convention vector:", conv.label(), "over terms", ch.SIGN_TERMS)

for text in ["(l l l)", "(l l l l)", "(b l)", "(b b)", "(b l l)"]:
    d = ch.diff_tree(tr.parse_tree(text), conv)
    print(f"d{text} = {d}")

# the unit and the white cork are cycles
print("d(l) =", ch.diff_tree("l", conv) or 0, " d(w) =", ch.diff_tree("w", conv) or 0)

# the cork-free formula with (i - 1) in the exponent does not square to zero
mu4 = ch.Generator(4, 0, ())
print("d d(mu_4) with (i-1):", ch.d_squared(mu4, ch.PRINTED_M0))

report = ch.validate_sign_convention(6).to_dict()
print("passing vectors:", report["passing"])
print("general exponent passes:", report["printed"]["passes"])

# composition carries Koszul signs
x = ch.ChainElement.basis(tr.parse_tree("((b l) l)"))
y = ch.ChainElement.basis(tr.parse_tree("(l l l)"))
print("((b l) l) o_2 (l l l) =", ch.compose_chain(x, 2, y))
