import graphene

import decider.schema


class Query(decider.schema.Query, graphene.ObjectType):
    pass


# snake_case field names, so the JSON reports match the command line options
schema = graphene.Schema(query=Query, auto_camelcase=False)
