"""Test suite for spherikit."""
