"""Signs of closed-form values at lambda*, certified by interval refinement."""
from signedhoffman import char_poly, derive_bridge_gadget, table_expr_eval
from signedhoffman.exact import lstar_from_poly
from signedhoffman.tables import TABLE1, bridge_composite, builtin_parts

# %% every first-table row at its smallest parameters
for key, row in TABLE1.items():
    params = row.samples(1)[0]
    sign, box = table_expr_eval(key, params)
    print(f"{key:24s} {params}  {sign:+d}  ~{float(box.mid):.6g}")

# %% a row whose sign flips as n1 grows
for n1 in range(3, 9):
    sign, box = table_expr_eval("table3:6", {"n1": n1})
    print(f"table3:6 n1={n1}  {sign:+d}  ~{float(box.mid):.3g}")

# %% two paths joined through the derived gadget, value of the char poly at lambda*
P4 = builtin_parts("P4")
for s in range(3, 7):
    G = bridge_composite(P4, "v2", derive_bridge_gadget(s), P4, "v2")
    val = lstar_from_poly(char_poly(G))
    print(f"s={s} n={G.n}  value {val}  ~{float(val.enclose(40).mid):.6f}")
