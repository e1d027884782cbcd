"""Fault-diagnosis mapper: consistency encoding and minimal-fault structure."""

from itertools import product

import pytest

from spinforge.core import brute_force, reduce_degree
from spinforge.errors import InputError
from spinforge.mappers import (
    EpsNetwork,
    diagnosis_consistent,
    map_fault_diagnosis,
    predicted_readouts,
)

from conftest import poly_value


def two_branch_net(readouts):
    # root 0 with children 1, 2; one sensor on each child
    return EpsNetwork(parents=(-1, 0, 0), sensor_attach=(1, 2), readouts=readouts)


def five_cb_net(readouts):
    # root 0 -> {1, 2}; 1 -> 3; 2 -> 4; sensors on the leaves 3 and 4
    return EpsNetwork(parents=(-1, 0, 0, 1, 2), sensor_attach=(3, 4), readouts=readouts)


class TestPaths:
    def test_path_lists(self):
        net = five_cb_net((1, 1))
        assert net.path(0) == (0, 1, 3)
        assert net.path(1) == (0, 2, 4)

    def test_poly_degree_is_path_length_plus_one(self):
        poly, _ = map_fault_diagnosis(five_cb_net((1, 1)))
        assert poly.degree == 4  # 3 CBs on the longest path + the sensor bit


class TestAllHealthy:
    def test_zero_energy_at_all_ones(self):
        net = two_branch_net((1, 1))
        poly, layout = map_fault_diagnosis(net)
        assert poly_value(poly.terms, (1,) * layout.num_bits) == pytest.approx(0.0)

    def test_any_fault_costs(self):
        net = two_branch_net((1, 1))
        poly, layout = map_fault_diagnosis(net)
        for bits in product((0, 1), repeat=layout.num_bits):
            if 0 in bits:
                assert poly_value(poly.terms, bits) >= 1.0 - 1e-12


class TestMinimalFaults:
    def test_both_low_explained_by_root_fault(self):
        net = two_branch_net((0, 0))
        poly, layout = map_fault_diagnosis(net)
        qubo, _ = reduce_degree(poly)
        gs = brute_force(qubo)
        assert gs.min_energy == pytest.approx(1.0, abs=1e-12)
        # unique minimal diagnosis: the root CB
        assert gs.count == 1
        faulty_cbs, faulty_sensors = layout.decode(gs.states[0][:layout.num_bits])
        assert faulty_cbs == (0,)
        assert faulty_sensors == ()

    def test_single_low_readout_is_threefold_degenerate(self):
        # sensor 0 Low, sensor 1 High: breaker 1, breaker 3, or sensor 0.
        # lam_path = 2 makes "leave it inconsistent" strictly worse than any
        # single fault, so only the fault explanations remain minimal.
        net = EpsNetwork(parents=(-1, 0, 0, 1, 2), sensor_attach=(3, 4),
                         readouts=(0, 1), lam_path=2.0)
        poly, layout = map_fault_diagnosis(net)
        qubo, _ = reduce_degree(poly)
        gs = brute_force(qubo)
        assert gs.min_energy == pytest.approx(1.0, abs=1e-12)
        assert gs.count == 3
        diagnoses = {layout.decode(s[:layout.num_bits]) for s in gs.states}
        assert diagnoses == {((1,), ()), ((3,), ()), ((), (0,))}

    def test_reduction_preserves_ground_degeneracy(self):
        net = five_cb_net((0, 0))
        poly, layout = map_fault_diagnosis(net)
        # oracle count over original (unreduced) bits
        best = None
        count = 0
        for bits in product((0, 1), repeat=layout.num_bits):
            e = poly_value(poly.terms, bits)
            if best is None or e < best - 1e-12:
                best, count = e, 1
            elif abs(e - best) <= 1e-12:
                count += 1
        gs = brute_force(reduce_degree(poly)[0])
        assert gs.min_energy == pytest.approx(best, abs=1e-9)
        assert gs.count == count


class TestConsistencyCharacterization:
    @pytest.mark.parametrize("readouts", [(1, 1), (1, 0), (0, 1), (0, 0)])
    def test_consistency_term_matches_forward_simulation(self, readouts):
        net = five_cb_net(readouts)
        poly, layout = map_fault_diagnosis(net)
        ncb = net.num_cbs
        for bits in product((0, 1), repeat=layout.num_bits):
            # strip the fault-count part: evaluate the full poly and subtract it
            energy = poly_value(poly.terms, bits)
            faults = (
                net.lam_cb * sum(1 - b for b in bits[:ncb])
                + net.lam_sensor * sum(1 - b for b in bits[ncb:])
            )
            consist = energy - faults
            ok = diagnosis_consistent(net, bits[:ncb], bits[ncb:])
            if ok:
                assert consist == pytest.approx(0.0, abs=1e-12)
            else:
                assert consist >= net.lam_path - 1e-12

    def test_forward_simulation(self):
        net = five_cb_net((1, 1))
        assert predicted_readouts(net, (1, 1, 1, 1, 1)) == (1, 1)
        assert predicted_readouts(net, (0, 1, 1, 1, 1)) == (0, 0)
        assert predicted_readouts(net, (1, 0, 1, 1, 1)) == (0, 1)


class TestValidation:
    def test_missing_readouts(self):
        net = EpsNetwork(parents=(-1,), sensor_attach=(0,))
        with pytest.raises(InputError):
            map_fault_diagnosis(net)

    def test_two_roots(self):
        with pytest.raises(InputError):
            EpsNetwork(parents=(-1, -1), sensor_attach=(0,), readouts=(1,))

    def test_cycle(self):
        with pytest.raises(InputError):
            EpsNetwork(parents=(1, 0), sensor_attach=(0,), readouts=(1,))

    def test_roundtrip(self):
        net = five_cb_net((0, 1))
        again = EpsNetwork.from_dict(net.to_dict())
        assert again == net
