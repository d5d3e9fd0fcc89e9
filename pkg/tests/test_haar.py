import numpy as np
import pytest
from scipy.stats import ks_2samp

from haarprod import AspectConfig, ConfigError
from haarprod.haar import (
    haar_unitary,
    product_chain,
    sample_ginibre,
    substream,
    trace_moment,
    truncate_block,
)


class TestAspectConfig:
    def test_alphas_derived(self):
        cfg = AspectConfig(n=8, dims=(4, 6, 4))
        assert cfg.k == 2
        assert cfg.alphas == (2.0, 8 / 6)
        assert cfg.out_dim == 4

    def test_rejects_dim_above_n(self):
        with pytest.raises(ConfigError):
            AspectConfig(n=4, dims=(5, 5))

    def test_rejects_nonminimal_endpoints(self):
        with pytest.raises(ConfigError):
            AspectConfig(n=8, dims=(6, 4, 6))
        with pytest.raises(ConfigError):
            AspectConfig(n=8, dims=(4, 6, 5))

    def test_rejects_short_chain(self):
        with pytest.raises(ConfigError):
            AspectConfig(n=8, dims=(8,))


class TestGinibre:
    def test_scalar_draw_finite(self):
        g = sample_ginibre(1, 1, substream(0, 0))
        assert g.shape == (1, 1)
        assert np.isfinite(g).all()

    def test_entry_statistics(self):
        # 1e5 i.i.d. entries; CLT bound 4/sqrt(1e5) per component
        g = sample_ginibre(400, 250, substream(1, 0)).ravel()
        bound = 4 / np.sqrt(g.size)
        assert abs(g.real.mean()) <= bound
        assert abs(g.imag.mean()) <= bound
        assert abs(np.mean(np.abs(g) ** 2) - 1.0) <= 0.02


class TestHaarUnitary:
    def test_scalar_is_unimodular(self):
        u = haar_unitary(1, substream(2, 0))
        assert abs(abs(u[0, 0]) - 1.0) <= 1e-12

    def test_columns_orthonormal(self):
        u = haar_unitary(8, substream(3, 0))
        gram = u.conj().T @ u
        assert np.max(np.abs(gram - np.eye(8))) <= 1e-12

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 16, 64, 256])
    def test_unitarity_across_sizes(self, n):
        for seed in (0, 1):
            u = haar_unitary(n, substream(seed, n))
            assert np.max(np.abs(u @ u.conj().T - np.eye(n))) <= 1e-12 * n

    def test_first_entry_second_moment(self):
        # E|U_11|^2 = 1/n for the Haar measure
        n, draws = 4, 10_000
        rng = substream(4, 0)
        vals = [abs(haar_unitary(n, rng)[0, 0]) ** 2 for _ in range(draws)]
        assert abs(np.mean(vals) - 1 / n) <= 0.02

    def test_left_invariance_of_trace(self):
        # Tr(VU) must be distributed like Tr(U) for any fixed unitary V
        n, draws = 6, 10_000
        j, l = np.meshgrid(np.arange(n), np.arange(n))
        v = np.exp(2j * np.pi * j * l / n) / np.sqrt(n)  # DFT matrix, unitary
        rng_a, rng_b = substream(5, 0), substream(5, 1)
        tr_u = np.array([np.trace(haar_unitary(n, rng_a)) for _ in range(draws)])
        tr_vu = np.array([np.trace(v @ haar_unitary(n, rng_b)) for _ in range(draws)])
        assert ks_2samp(tr_u.real, tr_vu.real).pvalue > 0.001
        assert ks_2samp(tr_u.imag, tr_vu.imag).pvalue > 0.001


class TestTruncateBlock:
    def test_full_block_is_identity_operation(self):
        u = haar_unitary(5, substream(6, 0))
        assert np.array_equal(truncate_block(u, 5, 5), u)

    def test_single_entry(self):
        u = haar_unitary(5, substream(6, 1))
        assert truncate_block(u, 1, 1)[0, 0] == u[0, 0]

    def test_truncation_is_contraction(self):
        u = haar_unitary(6, substream(6, 2))
        block = truncate_block(u, 3, 2)
        assert np.linalg.svd(block, compute_uv=False).max() <= 1 + 1e-12

    def test_oversize_block_rejected(self):
        u = haar_unitary(4, substream(6, 3))
        with pytest.raises(ValueError):
            truncate_block(u, 5, 4)


class TestProductChain:
    def test_untruncated_chain_is_haar_unitary(self):
        cfg = AspectConfig(n=16, dims=(16, 16))
        b = product_chain(cfg, master_seed=7)
        eigs = np.linalg.eigvals(b)
        assert np.max(np.abs(np.abs(eigs) - 1.0)) <= 1e-10

    def test_inner_dimension_chain(self):
        cfg = AspectConfig(n=8, dims=(4, 6, 4))
        b = product_chain(cfg, master_seed=8)
        assert b.shape == (4, 4)

    def test_contraction(self):
        for dims in [(4, 4, 4), (4, 6, 4), (3, 5, 6, 3)]:
            cfg = AspectConfig(n=8, dims=dims)
            b = product_chain(cfg, master_seed=9)
            assert np.linalg.svd(b, compute_uv=False).max() <= 1 + 1e-10

    def test_deterministic_in_seed(self):
        cfg = AspectConfig(n=8, dims=(4, 6, 4))
        b1 = product_chain(cfg, master_seed=10, trial=3)
        b2 = product_chain(cfg, master_seed=10, trial=3)
        assert np.array_equal(b1, b2)

    def test_trials_are_distinct(self):
        cfg = AspectConfig(n=8, dims=(4, 6, 4))
        b1 = product_chain(cfg, master_seed=10, trial=0)
        b2 = product_chain(cfg, master_seed=10, trial=1)
        assert not np.allclose(b1, b2)


class TestTraceMoment:
    def test_identity(self):
        for p in (0, 1, 4):
            assert trace_moment(np.eye(5, dtype=complex), p) == pytest.approx(1.0)

    def test_zero_matrix(self):
        assert trace_moment(np.zeros((3, 3), dtype=complex), 1) == 0.0

    def test_p_zero_is_one(self):
        b = product_chain(AspectConfig(n=8, dims=(4, 4)), master_seed=11)
        assert trace_moment(b, 0) == 1.0

    def test_mean_first_moment_matches_limit(self):
        # phi(aa*) = 1 / (alpha_1 alpha_2) = 1/4 at alpha = (2, 2)
        cfg = AspectConfig(n=400, dims=(200, 200, 200))
        vals = [trace_moment(product_chain(cfg, 12, trial=t), 1) for t in range(50)]
        assert abs(np.mean(vals) - 0.25) <= 0.01
