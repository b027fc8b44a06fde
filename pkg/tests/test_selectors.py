import numpy as np
import pytest

from npcs import (
    CostGrid,
    ExternalScorer,
    LabeledSample,
    Seed,
    default_grid,
    tube_cs,
    tubec_cs,
    vanilla_cs,
)
from npcs.errors import NoFeasibleCostError

from conftest import make_sample


class TestCostGrid:
    def test_default_grid_shape(self):
        grid = default_grid()
        assert len(grid) == 25
        assert grid.values[0] == 0.51
        assert grid.values[-1] == 0.99
        steps = np.diff(list(grid))
        assert np.allclose(steps, 0.02, atol=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            CostGrid(())
        with pytest.raises(ValueError):
            CostGrid((0.6, 0.6))
        with pytest.raises(ValueError):
            CostGrid((0.5, 0.4))
        with pytest.raises(ValueError):
            CostGrid((0.2, 1.0))


def posterior_like_sample(n0=200, n1=200, seed=40):
    # feature 0 is already a posterior-looking score in (0, 1), so the
    # post-training approach turns candidate costs directly into thresholds
    rng = np.random.default_rng(seed)
    s0 = rng.random(n0)
    s1 = np.clip(rng.random(n1) * 0.6 + 0.4, 0, 1)
    features = np.concatenate([s0, s1]).reshape(-1, 1)
    labels = np.concatenate([np.zeros(n0, dtype=int), np.ones(n1, dtype=int)])
    return LabeledSample(features, labels)


def identity_scorer():
    return ExternalScorer(lambda x: x[:, 0], is_posterior=True, name="identity")


class TestVanillaCs:
    def test_minimal_feasible_index(self):
        sample = posterior_like_sample()
        grid = CostGrid((0.6, 0.7, 0.8, 0.9))
        sel = vanilla_cs(sample, 0.35, grid, "post-training", identity_scorer(), Seed(1))
        # empirical profile decreases in the cost; the first candidate at or
        # under 0.35 must be chosen, and everything before it must miss
        assert sel.chosen_c0 in grid.values
        assert sel.estimates[sel.chosen_index] <= 0.35
        assert all(r > 0.35 for r in sel.estimates[: sel.chosen_index])
        assert not sel.fallback

    def test_first_candidate_when_already_feasible(self):
        sample = posterior_like_sample()
        grid = CostGrid((0.97, 0.98, 0.99))
        sel = vanilla_cs(sample, 0.9, grid, "post-training", identity_scorer(), Seed(2))
        assert sel.chosen_index == 0
        assert sel.chosen_c0 == 0.97

    def test_fallback_to_largest(self):
        sample = posterior_like_sample()
        grid = CostGrid((0.55, 0.6, 0.65))
        sel = vanilla_cs(sample, 1e-6, grid, "post-training", identity_scorer(), Seed(3))
        assert sel.fallback
        assert sel.chosen_index == len(grid) - 1
        assert sel.chosen_c0 == 0.65

    def test_profile_monotone_for_threshold_family(self):
        sample = posterior_like_sample()
        grid = CostGrid(tuple(np.round(np.linspace(0.5, 0.95, 10), 3)))
        sel = vanilla_cs(sample, 0.2, grid, "post-training", identity_scorer(), Seed(4))
        diffs = np.diff(sel.estimates)
        assert np.all(diffs <= 1e-12)

    def test_input_not_mutated_and_real_method(self):
        rng = np.random.default_rng(41)
        sample = make_sample(rng, 80, 80, d=2)
        before = sample.features.copy()
        sel = vanilla_cs(
            sample, 0.2, CostGrid((0.6, 0.8)), "stratification", "lr", Seed(5)
        )
        assert np.array_equal(sample.features, before)
        assert sel.selector == "vanilla-cs"


class TestTubeCs:
    def sample(self):
        return make_sample(np.random.default_rng(42), 70, 90, d=2)

    def test_alpha_one_selects_first(self):
        sel = tube_cs(
            self.sample(), 1.0, CostGrid((0.6, 0.7, 0.8)), 0.1,
            "stratification", "lr", Seed(6), B1=3, B=40,
        )
        assert sel.chosen_index == 0
        assert sel.chosen_c0 == 0.6

    def test_no_feasible_cost(self):
        grid = CostGrid((0.55, 0.6))
        with pytest.raises(NoFeasibleCostError) as err:
            tube_cs(
                self.sample(), 1e-9, grid, 0.1, "stratification", "lr",
                Seed(7), B1=3, B=40,
            )
        assert len(err.value.profile) == 2
        assert all(est > 1e-9 for _, est in err.value.profile)

    def test_final_classifier_trained_on_full_sample(self):
        sample = self.sample()
        sel = tube_cs(
            sample, 1.0, CostGrid((0.7,)), 0.1, "stratification", "lr",
            Seed(8), B1=3, B=40,
        )
        assert sel.classifier.scorer.n_train == sample.n

    def test_minimality(self):
        sel = tube_cs(
            self.sample(), 0.3, CostGrid((0.55, 0.7, 0.85, 0.97)), 0.1,
            "stratification", "lr", Seed(9), B1=4, B=60,
        )
        assert sel.estimates[sel.chosen_index] <= 0.3
        assert all(e > 0.3 for e in sel.estimates[: sel.chosen_index])


class TestTubecCs:
    def sample(self):
        return make_sample(np.random.default_rng(43), 70, 90, d=2)

    def test_alpha_one_selects_first(self):
        sel = tubec_cs(
            self.sample(), 1.0, CostGrid((0.6, 0.7)), 0.1,
            "stratification", "lr", Seed(10), B=40,
        )
        assert sel.chosen_index == 0

    def test_deterministic(self):
        args = (self.sample(), 0.5, CostGrid((0.6, 0.75, 0.9)), 0.1,
                "stratification", "lr")
        a = tubec_cs(*args, Seed(11, 3), B=80)
        b = tubec_cs(*args, Seed(11, 3), B=80)
        assert a.chosen_c0 == b.chosen_c0
        assert a.estimates == b.estimates

    def test_classifier_saw_only_split_data(self):
        sample = self.sample()
        sel = tubec_cs(
            sample, 1.0, CostGrid((0.7,)), 0.1, "stratification", "lr",
            Seed(12), B=40,
        )
        leftout = sample.n0 // 2
        assert sel.classifier.scorer.n_train == sample.n - leftout

    def test_no_feasible_cost(self):
        with pytest.raises(NoFeasibleCostError):
            tubec_cs(
                self.sample(), 1e-9, CostGrid((0.6,)), 0.1,
                "stratification", "lr", Seed(13), B=40,
            )
