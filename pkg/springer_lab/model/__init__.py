# noqa D104
