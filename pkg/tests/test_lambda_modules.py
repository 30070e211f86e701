import itertools

import pytest

from alexq.abelian import AbelianGroup
from alexq.autgroup import (
    Automorphism,
    enumerate_automorphisms,
    identity_automorphism,
    is_conjugate,
)
from alexq.errors import SpecError
from alexq.lambda_modules import (
    LambdaModule,
    _image_set,
    canonical_label,
    cyclic_name,
    image_one_minus_t,
    is_connected,
    is_lambda_isomorphic,
    parse_module_spec,
    scalar_cyclic_module,
)
from alexq.linearq import LinearQuandleSpec, build_linear


def module(spec: str) -> LambdaModule:
    return parse_module_spec(spec)


class TestImage:
    def test_linear_16_times_3(self):
        img = image_one_minus_t(module("L16/3"))
        assert img.group.factors == (8,)
        assert img.t.images == ((3,),)

    def test_identity_action_has_zero_image(self):
        for spec in ["L16/1", "4,4|1,0;0,1"]:
            img = image_one_minus_t(module(spec))
            assert img.order == 1

    def test_connected_companion_maps_onto_itself(self):
        # multiplication by t modulo 1 + t + t^4 on (Z2)^4
        M = module("2,2,2,2|0,1,0,0;0,0,1,0;0,0,0,1;1,1,0,0")
        assert len(_image_set(M)) == 16
        img = image_one_minus_t(M)
        assert img.group == M.group
        assert is_lambda_isomorphic(img, M) is not None

    def test_image_is_action_stable(self):
        for spec in ["L16/3", "L16/5", "4,4|0,1;3,2", "2,8|1,4;1,1"]:
            M = module(spec)
            img = _image_set(M)
            for x in img:
                assert M.t.apply(x) in img

    def test_orbit_index_relation(self):
        # |image| divides |M| for every automorphism on a few carriers
        for factors in [(8,), (2, 4)]:
            G = AbelianGroup(factors)
            for f in enumerate_automorphisms(G):
                M = LambdaModule(G, f)
                assert G.order % len(_image_set(M)) == 0


class TestIsomorphism:
    def test_self_isomorphic_identity_witness(self):
        M = module("4,4|0,1;3,2")
        h = is_lambda_isomorphic(M, M)
        assert h is not None

    def test_witness_commutes(self):
        M = module("4,4|0,1;1,1")
        M2 = module("4,4|2,1;3,3")  # lies in M's conjugacy class
        h = is_lambda_isomorphic(M, M2)
        assert h is not None
        for x in M.group.elements:
            assert h.apply(M.t.apply(x)) == M2.t.apply(h.apply(x))

    def test_cyclic_multipliers_distinguish(self):
        assert is_lambda_isomorphic(module("8|3"), module("8|7")) is None

    def test_image_of_l16_9_is_two_element_trivial(self):
        img = image_one_minus_t(module("L16/9"))
        assert is_lambda_isomorphic(img, module("2|1")) is not None

    def test_factor_mismatch_is_false(self):
        assert is_lambda_isomorphic(module("4|1"), module("2,2|1,0;0,1")) is None

    def test_agrees_with_conjugacy_on_shared_carrier(self):
        G = AbelianGroup((2, 4))
        auts = enumerate_automorphisms(G)
        for f, g in itertools.product(auts, repeat=2):
            lam = is_lambda_isomorphic(LambdaModule(G, f), LambdaModule(G, g))
            conj = is_conjugate(G, f, g)
            assert (lam is None) == (conj is None), (f.spec(), g.spec())

    def test_functorial_on_images(self):
        G = AbelianGroup((4, 4))
        auts = enumerate_automorphisms(G)
        pairs = [(auts[3], auts[11]), (auts[7], auts[40])]
        for f, g in pairs:
            M, M2 = LambdaModule(G, f), LambdaModule(G, g)
            if is_lambda_isomorphic(M, M2) is not None:
                assert (
                    is_lambda_isomorphic(image_one_minus_t(M), image_one_minus_t(M2))
                    is not None
                )


class TestConnectivity:
    def test_identity_disconnected(self):
        assert not is_connected(module("L16/1"))
        assert not is_connected(module("2|1"))

    def test_full_cycle_companion_connected(self):
        # multiplication by t modulo 1+t+t^2+t^3+t^4 on (Z2)^4
        M = module("2,2,2,2|0,1,0,0;0,0,1,0;0,0,0,1;1,1,1,1")
        assert is_connected(M)

    def test_z4z4_starred_row_connected(self):
        assert is_connected(module("4,4|0,1;1,1"))

    def test_connectivity_is_image_cardinality(self):
        for spec in ["L16/3", "L16/1", "4,4|0,1;1,1", "2,8|1,4;1,1"]:
            M = module(spec)
            assert is_connected(M) == (len(_image_set(M)) == M.order)


class TestLabels:
    def test_cyclic_scalar_labels(self):
        assert canonical_label(module("8|3")) == "Λ8/t-3"
        assert canonical_label(module("8|7")) == "Λ8/t-7"
        assert canonical_label(module("4|1")) == "Λ4/t+3"
        assert canonical_label(module("4|3")) == "Λ4/t+1"
        assert canonical_label(module("2|1")) == "Λ2/t+1"
        assert canonical_label(module("16|3")) == "Λ16/t-3"

    def test_zero_module(self):
        assert canonical_label(module("1|")) == "0"

    def test_binary_carrier_chain_labels(self):
        assert canonical_label(module("2,2|1,0;0,1")) == "(Λ2/t+1)^2"
        assert canonical_label(module("2,2|0,1;1,1")) == "Λ2/t^2+t+1"
        assert canonical_label(module("2,2|0,1;1,0")) == "Λ2/t^2+1"

    def test_squared_quadratic_label(self):
        M = module("2,2,2,2|0,1,0,0;1,1,0,0;0,0,0,1;0,0,1,1")
        assert canonical_label(M) == "(Λ2/t^2+t+1)^2"

    def test_fallback_label_embeds_least_conjugate(self):
        label = canonical_label(module("4,4|0,1;1,1"))
        assert label == "(4,4; t=0,1;1,1)"

    def test_mixed_scalar_sum_label(self):
        M = scalar_cyclic_module(((2, 1), (8, 3)))
        assert M.group.factors == (2, 8)
        assert canonical_label(M) == "Λ2/t+1⊕Λ8/t-3"

    def test_cyclic_name_conventions(self):
        assert cyclic_name(4, 1) == "Λ4/t+3"
        assert cyclic_name(4, 3) == "Λ4/t+1"
        assert cyclic_name(2, 1) == "Λ2/t+1"
        assert cyclic_name(8, 5) == "Λ8/t-5"

    def test_label_soundness_order_8_carriers(self):
        # equal labels iff isomorphic, across every structure of order 8
        mods = []
        for factors in [(8,), (2, 4), (2, 2, 2)]:
            G = AbelianGroup(factors)
            for f in enumerate_automorphisms(G):
                mods.append(LambdaModule(G, f))
        labels = {M: canonical_label(M) for M in mods}
        import random

        rng = random.Random(7)
        for M, M2 in rng.sample(list(itertools.product(mods, repeat=2)), 300):
            iso = is_lambda_isomorphic(M, M2) is not None
            assert iso == (labels[M] == labels[M2]), (M.spec(), M2.spec())


class TestModuleSpec:
    def test_roundtrip(self):
        M = module("4,4|0,1;3,2")
        assert M.spec() == "4,4|0,1;3,2"

    def test_linear_shorthand(self):
        M = module("L16/3")
        assert M.group.factors == (16,)
        assert M.t.images == ((3,),)

    def test_errors(self):
        with pytest.raises(SpecError):
            parse_module_spec("garbage")
        with pytest.raises(SpecError):
            parse_module_spec("L16/2")  # not a unit
        with pytest.raises(SpecError):
            parse_module_spec("4,4|0,1")
