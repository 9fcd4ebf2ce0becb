import pandas as pd


def to_dataframe(entries, column_order: list = None):
    data = [dict(entry.__dict__) for entry in entries]

    for d in data:
        d.pop("_sa_instance_state", None)

    df = pd.DataFrame(data)

    if column_order:
        df = reorder_df(df=df, order=column_order)

    return df


def reorder_df(df, order: list):
    return df.reindex(columns=order)


def matrix_to_dataframe(matrix):
    # 1-based row/column labels
    n = len(matrix)
    labels = list(range(1, n + 1))
    return pd.DataFrame(matrix, index=labels, columns=labels)


def add_style_to_df(df):
    int_cols = df.select_dtypes(include=["integer", "Int64"]).columns
    float_cols = df.select_dtypes(include=["floating"]).columns
    return (
        df.style
        .set_properties(**{
            "background-color": "#1F3A5F",
            "color": "#FFFFFF",
        })
        .format({col: "{:,.0f}" for col in int_cols}, na_rep="-")
        .format({col: "{:.3e}" for col in float_cols}, na_rep="-")
    )
