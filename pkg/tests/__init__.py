"""Tests for the pcard-toolkit package."""
