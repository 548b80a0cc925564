"""
Advanced Example: the G_{s,t} oracle, the Element Selecting Game and a verification run
"""
from src.esg import JRule, build_esg, solve_esg, verify_equivalence
from src.graphs import GstDescriptor
from src.gst import Fallback, classify, eta_gst_formula, gin_g_witness
from src.verification import SuiteManager, SuiteOptions


def main():
    print("=" * 60)
    print("Two-Player Pebbling - G_{s,t} Oracle Example")
    print("=" * 60)

    # H is a single edge on two S vertices, two T vertices
    descriptor = GstDescriptor(s=2, t=2, h_edges=frozenset({(0, 1)}))
    print(f"\n1. Graph {descriptor.label()}: eta at the root = {eta_gst_formula(2, 2)}")
    print(f"  Defender witness one pebble short: {gin_g_witness(2, 2)}")

    # Classify a few configurations
    print("\n2. Classifying configurations...")
    for config in [(0, 1, 1, 0, 0), (0, 8, 0, 0, 0), (0, 5, 4, 0, 0), (0, 7, 2, 0, 0)]:
        outcome = classify(descriptor, config)
        print(f"  {config}: {outcome.winner.value:<8} by {outcome.rule.value}")

    # Boundary configuration through the ESG
    print("\n3. The boundary configuration (0, 7, 2, 0, 0) as an Element Selecting Game...")
    for rule in JRule:
        instance = build_esg(descriptor, (0, 7, 2, 0, 0), rule)
        print(f"  {rule.value:<12} rounds={instance.rounds} sets={[sorted(s) for s in instance.sets]}"
              f" -> {solve_esg(instance).value}")
    report = verify_equivalence(descriptor, (0, 7, 2, 0, 0))
    print(f"✓ brute force says {report.brute.value}; agreeing rules: {[r.value for r in report.agreeing]}")

    # A small verification sweep
    print("\n4. Oracle sweep over s <= 2, t = 2...")
    manager = SuiteManager()
    options = SuiteOptions(s_max=2, t_values=(2,), max_pebbles=8, fallback=Fallback.BRUTE_FORCE.value)
    result = manager.run("oracle-sweep", options)
    print(f"  status: {result.status.value}, {result.agreements}/{result.cases} agree")
    for rule, counts in result.details["rules"].items():
        print(f"    {rule:<32} {counts['cases']:>5} cases")

    print("\n" + "=" * 60)
    print("Example completed successfully!")
    print("=" * 60)


if __name__ == "__main__":
    main()
