"""Configuration settings for the semigroup toolkit"""
import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # Report banners
    OUTPUT_WIDTH = int(os.getenv('OUTPUT_WIDTH', 60))

    # Split enumeration refuses more generators than this (2^(l-1) - 1 splits)
    MAX_SPLIT_GENERATORS = 16

    # Candidates tried by the affine gamma search
    AFFINE_SEARCH_BUDGET = 100000

    # Directories
    SEMIGROUP_DATA_DIR = './data/semigroups'

    @classmethod
    def validate(cls):
        """Validate configuration values"""
        problems = []
        if cls.OUTPUT_WIDTH < 20:
            problems.append(f"OUTPUT_WIDTH={cls.OUTPUT_WIDTH} (minimum 20)")
        if cls.MAX_SPLIT_GENERATORS < 2:
            problems.append(f"MAX_SPLIT_GENERATORS={cls.MAX_SPLIT_GENERATORS} (minimum 2)")
        if cls.AFFINE_SEARCH_BUDGET < 0:
            problems.append(f"AFFINE_SEARCH_BUDGET={cls.AFFINE_SEARCH_BUDGET} (must be nonnegative)")
        if problems:
            raise ValueError(f"Invalid configuration: {', '.join(problems)}")
        return True
