"""Round-robin experiment: LRU vs LFU when the working set is one key larger than the cache.

    python scripts/round_robin.py --capacity 10 --rounds 100
"""
import argparse

from constlfu.replay import compare
from constlfu.trace import gen_round_robin


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--capacity", type=int, default=10)
    parser.add_argument("--rounds", type=int, default=100)
    args = parser.parse_args()

    n_keys = args.capacity + 1
    events = gen_round_robin(n_keys, args.rounds)
    print(f"round-robin over {n_keys} keys, capacity {args.capacity}, {args.rounds} rounds")
    print(f"{'policy':<10}{'tiebreak':<10}{'hit_rate':>10}{'post_warmup':>13}")
    for tiebreak in ("fifo", "lifo"):
        for report in compare(["lru", "lfu", "lfu-heap", "oracle"], args.capacity, events, tiebreak):
            if report.policy == "lru" and tiebreak == "lifo":
                continue
            tb = "-" if report.policy == "lru" else tiebreak
            print(f"{report.policy:<10}{tb:<10}{report.hit_rate:>10.4f}{report.post_warmup_hit_rate:>13.4f}")
    print(f"(capacity-1)/n_keys = {(args.capacity - 1) / n_keys:.4f}")


if __name__ == "__main__":
    main()
