"""Which closed form matches the group-level Novikov product on Heisenberg?"""

import json

from limweight.carriers import Sampler, heis
from limweight.novikov import bracket_coefficient_finding, grading_derivation, hd_fixture


def main():
    hd = hd_fixture()
    triples = [(heis(1, 0, 0), heis(0, 1, 0), heis(0, 0, 1))] + Sampler(4).tuples(3, 3, 5)
    record = bracket_coefficient_finding(hd, grading_derivation(), triples)
    print(json.dumps(record, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
