"""Big-trader strength estimation, trading strategies and backtesting."""

from trademood._core import (  # noqa: F401
    BacktestReport,
    CostModel,
    EstimatorConfig,
    EstimatorState,
    IntervalPlan,
    ModelParams,
    PerStockStats,
    PortfolioStats,
    PriceSeries,
    RunSettings,
    SimulatedSeries,
    StrategyKind,
    StrategyRun,
    StrengthSegment,
    StrengthSeries,
    TradeCycle,
    TrueStrengthPath,
    ValuationSeries,
    aggregate_stats,
    annual_return,
    average_portfolio_value,
    batch_weighted_ls,
    cli_main,
    ed6,
    ed7,
    emit_report,
    estimate_series,
    excess_demand,
    load_prices,
    make_intervals,
    market_value_series,
    mood_index,
    moving_average,
    portfolio_return,
    rls_init,
    rls_step,
    run_full_backtest,
    run_strategy,
    signal_noise_ratio,
    simulate,
    write_prices,
)

__all__ = [name for name in dir() if not name.startswith("_")]
