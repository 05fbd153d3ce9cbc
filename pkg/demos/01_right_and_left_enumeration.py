"""
Right- and left-concatenated primes
===================================

Grow primes one digit at a time from the seed {2, 3, 5, 7}, either on the
right (digits 1, 3, 7, 9) or on the left (digits 1..9), keeping only primes.
Both processes die out: on the right after 8 digits, on the left after 24.
"""

from chiral_primes import Direction, enumerate_all

###############################################################################
# Right concatenation: every generation, then the termination report.
gens, report = enumerate_all(Direction.RIGHT)
for g in gens:
    print(g.index, len(g), " ".join(g.strings()))
print("stops after generation", report.last_nonempty_generation, "with", report.total_count, "primes")

###############################################################################
# Left concatenation grows much further before it collapses to a single prime.
gens, report = enumerate_all(Direction.LEFT)
print("left counts:", list(report.counts_per_generation))
print("largest:", report.maximal_set[0])

###############################################################################
# The counts per generation are the histogram data. Plotting is optional.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 2, figsize=(9, 3))
    for ax, direction in zip(axes, Direction):
        gens, _ = enumerate_all(direction)
        ax.bar([g.index for g in gens], [len(g) for g in gens])
        ax.set_title(f"{direction.value} concatenation")
        ax.set_xlabel("generation n")
    axes[0].set_ylabel("number of primes")
    fig.tight_layout()
    fig.savefig("generation_counts.png")
    print("wrote generation_counts.png")
