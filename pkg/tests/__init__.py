"""Test suite for syndrome-resampler."""
