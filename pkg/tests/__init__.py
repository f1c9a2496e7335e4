# Tests for epitab
