"""Growing graphs one vertex at a time while the radius stays at most lambda*."""
from signedhoffman import canonical_code, classify_all, extend_once, is_maximal, make_theta, search, to_sg

# %% the census of small connected signed graphs up to switching
for n in range(1, 6):
    census = classify_all(n)
    ok = sum(e.verdict.at_most_lambda_star for e in census)
    print(f"n={n}: {len(census)} classes, {ok} with rho <= lambda*")

# %% a theta graph that admits no further vertex
theta = make_theta(8, 2, 0)
print("Theta(8,2,0) maximal:", is_maximal(theta))

# %% a smaller theta still grows
seed = make_theta(6, 2, 0)
kids = extend_once(seed)
print("Theta(6,2,0) has", len(kids), "one-vertex extensions")

# %% three levels of search end in two maximal 12-vertex graphs
report = search(seed, 3)
print("frontier sizes:", report.frontier_sizes)
for rec in report.maximal_classes():
    print(canonical_code(rec.graph).hex()[:16], rec.verdict.name)
    print(to_sg(rec.graph))
