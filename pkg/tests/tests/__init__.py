#!/usr/bin/env python3
"""Tests for bastree."""
