"""Quick check of the Python bindings. Run after building the extension:

    pip install --no-build-isolation ./crates/py
    python python/smoke_test.py
"""

import json

import stabconv_py as sc


def main():
    x = sc.Pauli("XZZXI")
    y = sc.Pauli("IXZZX")
    assert x.commutes_with(y)
    assert (x * x).weight() == 0

    five = sc.builtin("five-qubit")
    steane = sc.builtin("steane")
    assert (five.n, five.k) == (5, 1)
    assert steane.distance_at_least_3()[0]
    assert steane.syndrome("IIIIIIY") == [-1, -1, -1, -1, -1, -1]

    circuit = sc.synthesize(five, steane, 3, 1)
    source = five.augment(3)
    assert source.apply(circuit).same_group(steane.augment(1))
    passed, summary, report = sc.verify(source, circuit)
    assert passed, summary
    assert json.loads(report)["passed"]

    shorter = sc.simplify(source, circuit)
    assert len(shorter) <= len(circuit)

    ref = sc.reference_circuit("five-steane")
    assert len(sc.simplify(source, ref)) == len(ref) - 4

    again = sc.Circuit.from_json(circuit.to_json())
    assert again.gates() == circuit.gates()
    print("ok:", len(circuit), "gates,", summary.strip())


if __name__ == "__main__":
    main()
