"""
Running the identity suite from Python
======================================

Every identity the library implements is registered as a named check
with a default parameter range. The suite is the same one behind
``degenpoly verify``; here it runs in-process at reduced ranges so the
whole demo finishes in a couple of seconds.
"""

from degenpoly import check_ids, run_suite

###############################################################################
# What is registered
# ------------------

ids = check_ids()
print(f"{len(ids)} registered checks:")
for check_id in ids:
    print("  -", check_id)

###############################################################################
# A fast pass over every check
# ----------------------------

results = run_suite(ranges={"n_max": 8, "m_max": 8, "k_max": 8})
print("\nresults at n_max=8:")
for spec in results:
    print(f"  {spec.status.upper():4s} {spec.id}")

failed = [spec for spec in results if spec.status != "pass"]
print(f"\n{len(results) - len(failed)} passed, {len(failed)} failed")

###############################################################################
# Smoke mode
# ----------
# Exact polynomial equality is the default. The sampled mode evaluates
# both sides at five fixed rational λ values instead; it is faster but
# explicitly non-exhaustive, so it is only a smoke signal.

smoke = run_suite(["thm-2.7-worpitzky"], ranges={"n_max": 10}, mode="smoke")
print("\nsmoke mode:", smoke[0].id, smoke[0].status)
