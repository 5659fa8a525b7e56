#!/usr/bin/env python3
"""Run a batch of random self-play games and print the statistics report."""

import argparse

from qgo.selfplay import SelfPlayConfig, run_self_play


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=4)
    parser.add_argument("--games", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    report, _ = run_self_play(SelfPlayConfig(size=args.size, games=args.games,
                                             seed=args.seed))
    for line in report.lines():
        print(line)


if __name__ == "__main__":
    main()
