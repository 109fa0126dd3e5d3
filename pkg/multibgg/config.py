class Config:
    theta_search_bound = 10
    """box half-width for the positivity functional search"""
    log_level = "INFO"
    default_max_iter = None
    """None means (number of variables) + 1"""
