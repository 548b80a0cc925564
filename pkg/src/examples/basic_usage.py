"""
Basic Example: solving positions and computing pebbling numbers
"""
from src.agents import CutSetDefender, OptimalAgent, RandomAgent
from src.game import GameSolver, GameState, play
from src.graphs import certificate_tree, complete, path
from src.pebbling import eta, eta_rooted, infinity_certificate, pi


def main():
    print("=" * 60)
    print("Two-Player Pebbling - Basic Example")
    print("=" * 60)

    # Solve single positions
    print("\n1. Solving positions on P_3 rooted at an end...")
    p3 = path(3, root=0)
    solver = GameSolver(p3)
    for config in [(0, 0, 3), (0, 0, 4)]:
        print(f"  {config}: {solver.solve_config(config).value} wins")

    # Play a game out
    print("\n2. Optimal play from (0, 0, 4)...")
    agent = OptimalAgent()
    transcript = play(p3, GameState.initial((0, 0, 4)), agent, agent)
    for entry in transcript.entries:
        print(f"  {entry.player.value:<8} {entry.move}  ({entry.remaining_pebbles} pebbles left)")
    print(f"✓ {transcript.winner.value} wins")

    # Pebbling numbers
    print("\n3. Pebbling numbers...")
    for name, graph in [("K_4", complete(4)), ("P_4", path(4))]:
        result = eta(graph, budget=8, max_cut=0)
        print(f"  {name}: pi = {pi(graph)}, eta = {result.value} (witness {result.witness})")

    # Infinite eta
    print("\n4. A tree with infinite eta...")
    tree = certificate_tree()
    result = eta_rooted(tree, 0)
    cert = result.certificate
    print(f"  kind: {result.kind.value}")
    print(f"  cut set: {sorted(cert.cut_set)}, root component: {sorted(cert.root_component)}")

    defender = CutSetDefender.from_certificate(infinity_certificate(tree, 0))
    game = play(tree, GameState.initial((0, 0, 6, 6, 3, 0, 2, 3)), RandomAgent(seed=1), defender)
    print(f"✓ random Mover against the cut-set Defender: {game.winner.value} wins after {len(game.entries)} moves")

    print("\n" + "=" * 60)
    print("Example completed successfully!")
    print("=" * 60)


if __name__ == "__main__":
    main()
